#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbc/scalar.hpp"

namespace symbc {

// Variables are numbered 0..2n-1 in the order x1, y1, x2, y2, ...
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Graded lexicographic order with x1 > y1 > x2 > ...; returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

std::string variable_name(int var);

class Poly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Poly() = default;
  Poly(const Scalar& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT

  static Poly variable(int var);
  static Poly monomial(const Monomial& m, const Scalar& c);

  // Terms sorted in decreasing grlex order; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;
  Scalar constant_term() const;
  int total_degree() const;
  bool depends_on(int var) const;

  Poly derivative(int var) const;
  Poly conj() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical text such as "x1**2*y2 - 3/2*x1 + 1".
  std::string to_string() const;

 private:
  void add_scaled(const Poly& o, const Scalar& c);
  std::vector<Term> terms_;
};

// Multivariate division by a single divisor. Returns the quotient when the
// remainder is zero (a single polynomial is always a Groebner basis of the
// ideal it generates, so this decides membership).
std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& rho);
bool poly_divisible(const Poly& f, const Poly& rho);

// Full division: f = q*rho + r.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& rho);

}  // namespace symbc
