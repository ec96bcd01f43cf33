#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "symbc/form.hpp"
#include "symbc/linalg.hpp"

namespace symbc {

// Primitive basis of P^s placed in degree k = 2r + s through L^r.
struct DecompositionBlock {
  int r = 0;
  int s = 0;
  std::vector<Form> primitives;  // constant forms of degree s with Lambda = 0
};

// Symplectic coframe: omega = sum w_{a_i} ^ w_{b_i}. The complex coframe is
// dz_i = w_{a_i} + i*jsign*w_{b_i}. Immutable; copies share the cached tables.
class DarbouxFrame {
 public:
  DarbouxFrame(int n, std::vector<std::pair<int, int>> pairs, int jsign = 1);
  static DarbouxFrame standard(int n, int jsign = 1);

  int n() const { return data_->n; }
  const std::vector<std::pair<int, int>>& pairs() const { return data_->pairs; }
  int jsign() const { return data_->jsign; }

  const Form& omega() const { return data_->omega_powers[1]; }
  // omega^r for 0 <= r <= n; higher powers vanish.
  Form omega_power(int r) const;
  // omega^n / n! = vol_sign * w_1 ^ ... ^ w_{2n}
  int vol_sign() const { return data_->vol_sign; }

  const std::vector<DecompositionBlock>& blocks(int k) const { return data_->blocks.at(k); }
  // Maps Lambda^k coordinates to block coordinates (concatenated in block order).
  const Matrix& decomposition_inverse(int k) const { return data_->decomposition_inverse.at(k); }
  // The conjugation operator on Lambda^k, sum i^{p-q} Pi^{p,q}.
  const Matrix& conjugation(int k) const { return data_->conjugation.at(k); }

  friend bool operator==(const DarbouxFrame& a, const DarbouxFrame& b) {
    return a.n() == b.n() && a.pairs() == b.pairs() && a.jsign() == b.jsign();
  }

 private:
  struct Data {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    int jsign = 1;
    std::vector<Form> omega_powers;
    int vol_sign = 1;
    std::vector<std::vector<DecompositionBlock>> blocks;
    std::vector<Matrix> decomposition_inverse;
    std::vector<Matrix> conjugation;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace symbc
