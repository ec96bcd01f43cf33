#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symbc/poly.hpp"

namespace symbc {

// Strictly increasing set of coframe indices, stored as a bitmask. Coframe
// index j is the differential of variable j (0-based: dx1, dy1, dx2, ...).
struct Wedge {
  std::uint16_t bits = 0;

  int degree() const { return __builtin_popcount(bits); }
  bool has(int j) const { return (bits >> j) & 1u; }
  std::vector<int> indices() const;

  friend bool operator==(Wedge a, Wedge b) { return a.bits == b.bits; }
  friend bool operator!=(Wedge a, Wedge b) { return a.bits != b.bits; }
};

// Lexicographic order on the index sequences (dx1 before dy1 before dx2...).
struct WedgeLess {
  bool operator()(Wedge a, Wedge b) const {
    if (a.bits == b.bits) return false;
    std::uint16_t diff = a.bits ^ b.bits;
    std::uint16_t low = diff & static_cast<std::uint16_t>(-diff);
    return (a.bits & low) != 0;
  }
};

// Sign of w_I ^ w_J relative to w_{I|J}; 0 when I and J overlap.
int wedge_sign(Wedge a, Wedge b);

class Form {
 public:
  using Terms = std::map<Wedge, Poly, WedgeLess>;

  Form() = default;
  // Zero form of the given degree. Zero forms may carry degrees outside
  // [0, 2n] so operators such as L and Lambda stay total.
  Form(int n, int degree);

  static Form constant(int n, const Scalar& c);
  static Form function(int n, const Poly& p);
  static Form monomial(int n, Wedge w, const Poly& p);
  static Form differential(int n, int j);  // w_j

  int n() const { return n_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  bool is_constant() const;
  Poly coefficient(Wedge w) const;

  // Adds p * w_I, merging and dropping zeros.
  void add_term(Wedge w, const Poly& p);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  Form operator-() const { return *this * Scalar(-1); }

  // Poly-linear multiplication of every coefficient.
  Form times(const Poly& p) const;
  Form conj() const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_compatible(const Form& o) const;
  int n_ = 0;
  int degree_ = 0;
  Terms terms_;
};

std::string wedge_to_string(Wedge w);

// Basis of Lambda^k in canonical order, and the inverse lookup.
const std::vector<Wedge>& wedge_basis(int n, int k);
int wedge_index(int n, Wedge w);

}  // namespace symbc
