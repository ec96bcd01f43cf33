#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symbc/form.hpp"

namespace symbc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: integers, '/', 'i', variables xk yk, differentials dxk dyk,
// '*' and '^' (both the exterior product; with a function it is plain
// multiplication), '**' for integer powers, '+', '-', parentheses.
Form parse_form(int n, const std::string& text);            // must be homogeneous
std::vector<Form> parse_forms(int n, const std::string& text);  // components by degree

}  // namespace symbc
