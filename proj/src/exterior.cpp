#include "symbc/exterior.hpp"

#include <stdexcept>

#include "symbc/frame.hpp"

namespace symbc {

namespace {

Wedge single(int j) { return Wedge{static_cast<std::uint16_t>(1u << j)}; }

// Sign from moving w_j to the front of w_I (j not in I).
int front_sign(int j, Wedge w) {
  int below = __builtin_popcount(w.bits & ((1u << j) - 1u));
  return below % 2 ? -1 : 1;
}

void require_same_n(const Form& f, const Form& g) {
  if (f.n() != g.n()) throw std::invalid_argument("forms over different dimensions");
}

}  // namespace

Form wedge(const Form& f, const Form& g) {
  require_same_n(f, g);
  Form out(f.n(), f.degree() + g.degree());
  if (out.degree() > 2 * f.n()) return out;
  for (const auto& [wa, pa] : f.terms())
    for (const auto& [wb, pb] : g.terms()) {
      int s = wedge_sign(wa, wb);
      if (s == 0) continue;
      Poly prod = pa * pb;
      if (s < 0) prod = -prod;
      out.add_term(Wedge{static_cast<std::uint16_t>(wa.bits | wb.bits)}, prod);
    }
  return out;
}

Form contract(int j, const Form& f) {
  if (j < 0 || j >= 2 * f.n()) throw std::out_of_range("coframe index out of range");
  Form out(f.n(), f.degree() - 1);
  for (const auto& [w, p] : f.terms()) {
    if (!w.has(j)) continue;
    Wedge rest{static_cast<std::uint16_t>(w.bits & ~(1u << j))};
    out.add_term(rest, front_sign(j, rest) < 0 ? -p : p);
  }
  return out;
}

Form interior(const VectorField& X, const Form& f) {
  if (static_cast<int>(X.size()) != 2 * f.n()) throw std::invalid_argument("vector field has wrong size");
  Form out(f.n(), f.degree() - 1);
  for (int j = 0; j < 2 * f.n(); ++j)
    if (!X[j].is_zero()) out += contract(j, f).times(X[j]);
  return out;
}

Form exterior_d(const Form& f) {
  Form out(f.n(), f.degree() + 1);
  if (out.degree() > 2 * f.n()) return out;
  for (const auto& [w, p] : f.terms())
    for (int j = 0; j < 2 * f.n(); ++j) {
      if (w.has(j)) continue;
      Poly dp = p.derivative(j);
      if (dp.is_zero()) continue;
      out.add_term(Wedge{static_cast<std::uint16_t>(w.bits | (1u << j))}, front_sign(j, w) < 0 ? -dp : dp);
    }
  return out;
}

Form partial(int var, const Form& f) {
  Form out(f.n(), f.degree());
  for (const auto& [w, p] : f.terms()) out.add_term(w, p.derivative(var));
  return out;
}

Form lie_derivative(const VectorField& X, const Form& f) {
  Form a = exterior_d(interior(X, f));
  Form b = interior(X, exterior_d(f));
  if (f.degree() == 0) return b;
  return a + b;
}

Form hodge_star(const DarbouxFrame& frame, const Form& f) {
  int n = f.n();
  if (frame.n() != n) throw std::invalid_argument("frame dimension mismatch");
  Form out(n, 2 * n - f.degree());
  std::uint16_t full = static_cast<std::uint16_t>((1u << (2 * n)) - 1u);
  for (const auto& [w, p] : f.terms()) {
    Wedge comp{static_cast<std::uint16_t>(full & ~w.bits)};
    int s = wedge_sign(w, comp) * frame.vol_sign();
    out.add_term(comp, s < 0 ? -p : p);
  }
  return out;
}

Form pair_contraction(const std::vector<std::pair<int, int>>& pairs, const Form& f) {
  Form out(f.n(), f.degree() - 2);
  for (const auto& [a, b] : pairs) out += contract(b, contract(a, f));
  return out;
}

Form coframe_transform(const Matrix& T, const Form& f) {
  int n = f.n();
  if (T.rows() != 2 * n || T.cols() != 2 * n) throw std::invalid_argument("coframe map has wrong shape");
  std::vector<Form> images;
  for (int j = 0; j < 2 * n; ++j) {
    Form img(n, 1);
    for (int l = 0; l < 2 * n; ++l)
      if (!T.at(l, j).is_zero()) img.add_term(single(l), Poly(T.at(l, j)));
    images.push_back(std::move(img));
  }
  Form out(n, f.degree());
  for (const auto& [w, p] : f.terms()) {
    Form prod = Form::function(n, p);
    for (int j : w.indices()) prod = wedge(prod, images[j]);
    out += prod;
  }
  return out;
}

Form apply_constant_map(const Matrix& M, const Form& f, int target_degree) {
  int n = f.n();
  const auto& target = wedge_basis(n, target_degree);
  if (M.rows() != static_cast<int>(target.size()) ||
      M.cols() != static_cast<int>(wedge_basis(n, f.degree()).size()))
    throw std::invalid_argument("constant map has wrong shape");
  Form out(n, target_degree);
  for (const auto& [w, p] : f.terms()) {
    int col = wedge_index(n, w);
    for (int r = 0; r < M.rows(); ++r) {
      const Scalar& c = M.at(r, col);
      if (!c.is_zero()) out.add_term(target[r], p * c);
    }
  }
  return out;
}

bool vanishes_mod(const Form& f, const Poly& rho) {
  for (const auto& [w, p] : f.terms())
    if (!poly_divisible(p, rho)) return false;
  return true;
}

}  // namespace symbc
