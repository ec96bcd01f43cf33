#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symbc {

struct IdentityResult {
  std::string name;
  int checked = 0;
  int failed = 0;
  std::optional<std::string> witness;  // first failing input
};

// Runs every operator identity on `cases` seeded random forms (and random
// primitive forms where an identity is stated on primitives).
std::vector<IdentityResult> run_identity_suite(int n, int cases, std::uint64_t seed);

}  // namespace symbc
