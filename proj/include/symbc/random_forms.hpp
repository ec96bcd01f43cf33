#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symbc/form.hpp"
#include "symbc/frame.hpp"

namespace symbc {

// Seeded generator for test and identity-suite inputs. Coefficients are
// polynomials of total degree <= 3 with 1..3 terms and integer coefficients
// in [-5, 5] \ {0}; forms have 1..3 wedge terms. mt19937_64 is fully
// specified by the standard and the bounded draws below avoid the
// implementation-defined distributions, so streams match across platforms.
class FormGenerator {
 public:
  explicit FormGenerator(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);  // inclusive

  // vars: allowed variable indices (empty means constants only).
  Poly random_poly(const std::vector<int>& vars, int max_degree = 3, int max_terms = 3);
  Form random_form(int n, int k, const std::vector<int>& vars);
  // Pi of a random form; retries until non-zero (k <= n).
  Form random_primitive(const DarbouxFrame& frame, int k, const std::vector<int>& vars);

  static std::vector<int> all_vars(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symbc
