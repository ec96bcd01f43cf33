#include "symbc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbc {

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kMaxVars; ++v)
    if (exp[v] > other.exp[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = exp[v] + o.exp[v];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exp[v] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) m.exp[v] = static_cast<std::uint8_t>(exp[v] - o.exp[v]);
  return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int v = 0; v < kMaxVars; ++v)
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? -1 : 1;
  return 0;
}

std::string variable_name(int var) {
  return std::string(var % 2 == 0 ? "x" : "y") + std::to_string(var / 2 + 1);
}

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

// Sorts and merges equal monomials, dropping zeros.
std::vector<Poly::Term> normalize(std::vector<Poly::Term> raw) {
  std::sort(raw.begin(), raw.end(), term_before);
  std::vector<Poly::Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(int var) {
  if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[var] = 1;
  return monomial(m, Scalar(1));
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total_degree() == 0);
}

bool Poly::is_real() const {
  for (const auto& t : terms_)
    if (!t.second.is_real()) return false;
  return true;
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.total_degree() == 0) return terms_.back().second;
  return Scalar(0);
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().first.total_degree();
}

bool Poly::depends_on(int var) const {
  for (const auto& t : terms_)
    if (t.first.exp[var] != 0) return true;
  return false;
}

Poly Poly::derivative(int var) const {
  std::vector<Term> raw;
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial dm = m;
    dm.exp[var] -= 1;
    raw.emplace_back(dm, c * Scalar(static_cast<long>(m.exp[var])));
  }
  Poly p;
  p.terms_ = normalize(std::move(raw));
  return p;
}

Poly Poly::conj() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = t.second.conj();
  return p;
}

void Poly::add_scaled(const Poly& o, const Scalar& c) {
  if (o.is_zero() || c.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int cmp;
    if (a == terms_.end()) {
      cmp = -1;
    } else if (b == o.terms_.end()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a->first, b->first);
    }
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, Scalar(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, Scalar(-1));
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.is_constant()) return a * b.constant_term();
  if (a.is_constant()) return b * a.constant_term();
  std::vector<Poly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) raw.emplace_back(ma * mb, ca * cb);
  Poly p;
  p.terms_ = normalize(std::move(raw));
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      if (m.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(v);
      if (m.exp[v] > 1) mono += "**" + std::to_string(m.exp[v]);
    }
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = negative ? -c : c;
    std::string coef = mag.to_string();
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (mag.is_one()) {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& rho) {
  if (rho.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& [lm, lc] = rho.terms().front();
  Scalar lc_inv = lc.inverse();
  Poly q, r, p = f;
  while (!p.is_zero()) {
    const auto& [pm, pc] = p.terms().front();
    if (lm.divides(pm)) {
      Poly step = Poly::monomial(pm / lm, pc * lc_inv);
      q += step;
      p -= step * rho;
    } else {
      Poly lead = Poly::monomial(pm, pc);
      r += lead;
      p -= lead;
    }
  }
  return {q, r};
}

std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& rho) {
  auto [q, r] = poly_divmod(f, rho);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool poly_divisible(const Poly& f, const Poly& rho) { return poly_divide_exact(f, rho).has_value(); }

}  // namespace symbc
