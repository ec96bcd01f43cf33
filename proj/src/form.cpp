#include "symbc/form.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace symbc {

std::vector<int> Wedge::indices() const {
  std::vector<int> out;
  for (int j = 0; j < 16; ++j)
    if (has(j)) out.push_back(j);
  return out;
}

int wedge_sign(Wedge a, Wedge b) {
  if (a.bits & b.bits) return 0;
  int swaps = 0;
  for (int j = 0; j < 16; ++j) {
    if (!b.has(j)) continue;
    std::uint16_t above = static_cast<std::uint16_t>(a.bits >> (j + 1));
    swaps += __builtin_popcount(above);
  }
  return swaps % 2 ? -1 : 1;
}

namespace {

struct BasisCache {
  // [n][k] -> ordered masks; [n][mask] -> index within its degree
  std::array<std::vector<std::vector<Wedge>>, 5> bases;
  std::array<std::vector<int>, 5> index;

  BasisCache() {
    for (int n = 0; n <= 4; ++n) {
      int dim = 2 * n;
      bases[n].resize(dim + 1);
      index[n].assign(1u << dim, -1);
      for (unsigned m = 0; m < (1u << dim); ++m) {
        Wedge w{static_cast<std::uint16_t>(m)};
        bases[n][w.degree()].push_back(w);
      }
      for (auto& list : bases[n]) {
        std::sort(list.begin(), list.end(), WedgeLess{});
        for (std::size_t i = 0; i < list.size(); ++i) index[n][list[i].bits] = static_cast<int>(i);
      }
    }
  }
};

const BasisCache& basis_cache() {
  static const BasisCache cache;
  return cache;
}

void check_n(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("half-dimension must be in 1..4");
}

}  // namespace

const std::vector<Wedge>& wedge_basis(int n, int k) {
  check_n(n);
  static const std::vector<Wedge> empty;
  if (k < 0 || k > 2 * n) return empty;
  return basis_cache().bases[n][k];
}

int wedge_index(int n, Wedge w) {
  check_n(n);
  return basis_cache().index[n].at(w.bits);
}

Form::Form(int n, int degree) : n_(n), degree_(degree) { check_n(n); }

Form Form::constant(int n, const Scalar& c) { return function(n, Poly(c)); }

Form Form::function(int n, const Poly& p) {
  Form f(n, 0);
  f.add_term(Wedge{}, p);
  return f;
}

Form Form::monomial(int n, Wedge w, const Poly& p) {
  Form f(n, w.degree());
  f.add_term(w, p);
  return f;
}

Form Form::differential(int n, int j) {
  if (j < 0 || j >= 2 * n) throw std::out_of_range("coframe index out of range");
  return monomial(n, Wedge{static_cast<std::uint16_t>(1u << j)}, Poly(1));
}

bool Form::is_real() const {
  for (const auto& [w, p] : terms_)
    if (!p.is_real()) return false;
  return true;
}

bool Form::is_constant() const {
  for (const auto& [w, p] : terms_)
    if (!p.is_constant()) return false;
  return true;
}

Poly Form::coefficient(Wedge w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly() : it->second;
}

void Form::add_term(Wedge w, const Poly& p) {
  if (p.is_zero()) return;
  if (w.degree() != degree_) throw std::invalid_argument("inhomogeneous term added to form");
  if (w.bits >> (2 * n_)) throw std::out_of_range("wedge index exceeds 2n");
  auto [it, inserted] = terms_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form::check_compatible(const Form& o) const {
  if (n_ != o.n_) throw std::invalid_argument("forms over different dimensions");
  if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
}

Form& Form::operator+=(const Form& o) {
  check_compatible(o);
  for (const auto& [w, p] : o.terms_) add_term(w, p);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_compatible(o);
  for (const auto& [w, p] : o.terms_) add_term(w, -p);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= c;
  return *this;
}

Form Form::times(const Poly& q) const {
  Form out(n_, degree_);
  for (const auto& [w, p] : terms_) out.add_term(w, p * q);
  return out;
}

Form Form::conj() const {
  Form out(n_, degree_);
  for (const auto& [w, p] : terms_) out.add_term(w, p.conj());
  return out;
}

std::string wedge_to_string(Wedge w) {
  std::string out;
  for (int j : w.indices()) {
    if (!out.empty()) out += "^";
    out += "d" + variable_name(j);
  }
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, p] : terms_) {
    std::string diff = wedge_to_string(w);
    for (const auto& [m, c] : p.terms()) {
      std::string factors;
      for (int v = 0; v < kMaxVars; ++v) {
        if (m.exp[v] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += variable_name(v);
        if (m.exp[v] > 1) factors += "**" + std::to_string(m.exp[v]);
      }
      if (!diff.empty()) factors += factors.empty() ? diff : "*" + diff;
      bool negative = c.is_real() && sgn(c.re()) < 0;
      Scalar mag = negative ? -c : c;
      std::string term;
      if (factors.empty()) {
        term = mag.to_string();
      } else if (mag.is_one()) {
        term = factors;
      } else {
        term = mag.to_string() + "*" + factors;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
  }
  return out;
}

}  // namespace symbc
