#include "symbc/symplectic.hpp"

#include <stdexcept>
#include <utility>

#include "symbc/exterior.hpp"

namespace symbc {

namespace {

void require_frame(const DarbouxFrame& frame, const Form& f) {
  if (frame.n() != f.n()) throw std::invalid_argument("frame dimension mismatch");
}

bool in_range(const Form& f) { return f.degree() >= 0 && f.degree() <= 2 * f.n(); }

// Decomposes d(beta_s) for primitive beta_s into beta'_{s+1} + omega ^ beta'_{s-1}.
std::pair<Form, Form> split_d_of_primitive(const DarbouxFrame& frame, const Form& beta) {
  int n = beta.n(), s = beta.degree();
  Form plus(n, s + 1), minus(n, s - 1);
  LefschetzDecomposition dec = lefschetz_decompose(frame, exterior_d(beta));
  for (auto& [r, comp] : dec.components) {
    if (r == 0) {
      plus = comp;
    } else if (r == 1) {
      minus = comp;
    } else if (!comp.is_zero()) {
      throw std::logic_error("d of a primitive form has a component with r >= 2");
    }
  }
  return {plus, minus};
}

std::pair<Form, Form> del_pair(const DarbouxFrame& frame, const Form& f) {
  require_frame(frame, f);
  int n = f.n(), k = f.degree();
  Form plus(n, k + 1), minus(n, k - 1);
  for (const auto& [r, beta] : lefschetz_decompose(frame, f).components) {
    if (beta.is_zero()) continue;
    auto [bp, bm] = split_d_of_primitive(frame, beta);
    const Form w = frame.omega_power(r);
    if (!bp.is_zero()) plus += wedge(w, bp);
    if (!bm.is_zero()) minus += wedge(w, bm);
  }
  return {plus, minus};
}

}  // namespace

Form LefschetzDecomposition::reconstruct(const DarbouxFrame& frame) const {
  Form out(n, degree);
  for (const auto& [r, beta] : components) out += wedge(frame.omega_power(r), beta);
  return out;
}

Form lefschetz_L(const DarbouxFrame& frame, const Form& f) {
  require_frame(frame, f);
  return wedge(frame.omega(), f);
}

Form dual_Lambda(const DarbouxFrame& frame, const Form& f) {
  require_frame(frame, f);
  return pair_contraction(frame.pairs(), f);
}

Form degree_H(const Form& f) { return f * Scalar(static_cast<long>(f.n() - f.degree())); }

LefschetzDecomposition lefschetz_decompose(const DarbouxFrame& frame, const Form& f) {
  require_frame(frame, f);
  LefschetzDecomposition out;
  out.n = f.n();
  out.degree = f.degree();
  if (!in_range(f)) return out;
  int n = f.n(), k = f.degree();
  const Matrix& inv = frame.decomposition_inverse(k);
  std::vector<Poly> coords(inv.rows());
  for (const auto& [w, p] : f.terms()) {
    int col = wedge_index(n, w);
    for (int r = 0; r < inv.rows(); ++r) {
      const Scalar& c = inv.at(r, col);
      if (!c.is_zero()) coords[r] += p * c;
    }
  }
  std::size_t next = 0;
  for (const auto& blk : frame.blocks(k)) {
    Form beta(n, blk.s);
    for (const auto& prim : blk.primitives) {
      const Poly& c = coords[next++];
      if (c.is_zero()) continue;
      for (const auto& [w, p] : prim.terms()) beta.add_term(w, c * p.constant_term());
    }
    out.components.emplace(blk.r, std::move(beta));
  }
  return out;
}

std::vector<LefschetzComponent> lefschetz_components(const DarbouxFrame& frame, const Form& f) {
  std::vector<LefschetzComponent> out;
  for (const auto& [r, beta] : lefschetz_decompose(frame, f).components) {
    if (beta.is_zero()) continue;
    out.push_back({r, beta.degree(), wedge(frame.omega_power(r), beta)});
  }
  return out;
}

bool is_primitive(const DarbouxFrame& frame, const Form& f) {
  if (f.is_zero()) return true;
  if (f.degree() > f.n()) return false;
  return dual_Lambda(frame, f).is_zero();
}

Form scale_components(const DarbouxFrame& frame, const Form& f,
                      const std::function<Scalar(int, int, int)>& factor) {
  Form out(f.n(), f.degree());
  for (const auto& c : lefschetz_components(frame, f)) out += c.value * factor(c.r, c.s, f.degree());
  return out;
}

Form weight_R(const DarbouxFrame& frame, const Form& f) {
  return scale_components(frame, f, [](int r, int, int) { return Scalar(r); });
}

Form project_Pi(const DarbouxFrame& frame, const Form& f) {
  if (f.degree() > f.n()) throw std::domain_error("projection to primitives needs degree <= n");
  auto dec = lefschetz_decompose(frame, f);
  auto it = dec.components.find(0);
  return it == dec.components.end() ? Form(f.n(), f.degree()) : it->second;
}

Form star_r(const DarbouxFrame& frame, const Form& beta) {
  if (beta.degree() > beta.n()) throw std::domain_error("star_r needs degree <= n");
  if (!is_primitive(frame, beta)) throw std::domain_error("star_r needs a primitive form");
  return wedge(frame.omega_power(beta.n() - beta.degree()), beta);
}

Form conj_J(const DarbouxFrame& frame, const Form& f) {
  require_frame(frame, f);
  if (!in_range(f)) return f;
  return apply_constant_map(frame.conjugation(f.degree()), f, f.degree());
}

Form conj_J_inverse(const DarbouxFrame& frame, const Form& f) {
  Form j = conj_J(frame, f);
  return f.degree() % 2 ? -j : j;
}

Form d_Lambda(const DarbouxFrame& frame, const Form& f) {
  return exterior_d(dual_Lambda(frame, f)) - dual_Lambda(frame, exterior_d(f));
}

Form del_plus(const DarbouxFrame& frame, const Form& f) { return del_pair(frame, f).first; }
Form del_minus(const DarbouxFrame& frame, const Form& f) { return del_pair(frame, f).second; }

Form d_star(const DarbouxFrame& frame, const Form& f) {
  return -hodge_star(frame, exterior_d(hodge_star(frame, f)));
}

Form d_Lambda_star(const DarbouxFrame& frame, const Form& f) {
  return conj_J_inverse(frame, exterior_d(conj_J(frame, f)));
}

Form del_plus_star(const DarbouxFrame& frame, const Form& f) {
  int n = f.n(), k = f.degree();
  Form out(n, k - 1);
  for (const auto& c : lefschetz_components(frame, f)) {
    int h = n - k;
    Form term = d_star(frame, c.value) * Scalar(h + c.r + 1) + d_Lambda_star(frame, dual_Lambda(frame, c.value));
    out += term * Scalar(1, h + 2 * c.r + 1);
  }
  return out;
}

Form del_minus_star(const DarbouxFrame& frame, const Form& f) {
  int n = f.n(), k = f.degree();
  Form out(n, k + 1);
  for (const auto& c : lefschetz_components(frame, f)) {
    // A component with r + s = n has no partner L^r P^{s+1}, so the adjoint is zero there.
    if (c.r + c.s == n) continue;
    int h = n - k;
    Form term = d_star(frame, lefschetz_L(frame, c.value)) * Scalar(1, n - k + c.r) - d_Lambda_star(frame, c.value);
    out += term * Scalar(1, h + 2 * c.r + 1);
  }
  return out;
}

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::d: return "d";
    case OperatorKind::dLambda: return "dLambda";
    case OperatorKind::delPlus: return "delPlus";
    case OperatorKind::delMinus: return "delMinus";
    case OperatorKind::dStar: return "dStar";
    case OperatorKind::dLambdaStar: return "dLambdaStar";
    case OperatorKind::delPlusStar: return "delPlusStar";
    case OperatorKind::delMinusStar: return "delMinusStar";
    case OperatorKind::delPlusDelMinus: return "delPlusDelMinus";
    case OperatorKind::delPlusDelMinusStar: return "delPlusDelMinusStar";
  }
  return "?";
}

int degree_shift(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::d:
    case OperatorKind::delPlus:
    case OperatorKind::dLambdaStar:
    case OperatorKind::delMinusStar:
      return 1;
    case OperatorKind::dLambda:
    case OperatorKind::delMinus:
    case OperatorKind::dStar:
    case OperatorKind::delPlusStar:
      return -1;
    case OperatorKind::delPlusDelMinus:
    case OperatorKind::delPlusDelMinusStar:
      return 0;
  }
  return 0;
}

int operator_order(OperatorKind kind) {
  return kind == OperatorKind::delPlusDelMinus || kind == OperatorKind::delPlusDelMinusStar ? 2 : 1;
}

bool is_starred(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::dStar:
    case OperatorKind::dLambdaStar:
    case OperatorKind::delPlusStar:
    case OperatorKind::delMinusStar:
    case OperatorKind::delPlusDelMinusStar:
      return true;
    default:
      return false;
  }
}

OperatorKind adjoint_kind(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::d: return OperatorKind::dStar;
    case OperatorKind::dLambda: return OperatorKind::dLambdaStar;
    case OperatorKind::delPlus: return OperatorKind::delPlusStar;
    case OperatorKind::delMinus: return OperatorKind::delMinusStar;
    case OperatorKind::dStar: return OperatorKind::d;
    case OperatorKind::dLambdaStar: return OperatorKind::dLambda;
    case OperatorKind::delPlusStar: return OperatorKind::delPlus;
    case OperatorKind::delMinusStar: return OperatorKind::delMinus;
    case OperatorKind::delPlusDelMinus: return OperatorKind::delPlusDelMinusStar;
    case OperatorKind::delPlusDelMinusStar: return OperatorKind::delPlusDelMinus;
  }
  return kind;
}

Form adjoint(const DarbouxFrame& frame, OperatorKind kind, const Form& f) {
  require_frame(frame, f);
  switch (kind) {
    case OperatorKind::dStar: return d_star(frame, f);
    case OperatorKind::dLambdaStar: return d_Lambda_star(frame, f);
    case OperatorKind::delPlusStar: return del_plus_star(frame, f);
    case OperatorKind::delMinusStar: return del_minus_star(frame, f);
    case OperatorKind::delPlusDelMinusStar: return del_minus_star(frame, del_plus_star(frame, f));
    default: throw std::invalid_argument("adjoint() needs a starred operator kind");
  }
}

Form apply_operator(const DarbouxFrame& frame, OperatorKind kind, const Form& f) {
  require_frame(frame, f);
  switch (kind) {
    case OperatorKind::d: return exterior_d(f);
    case OperatorKind::dLambda: return d_Lambda(frame, f);
    case OperatorKind::delPlus: return del_plus(frame, f);
    case OperatorKind::delMinus: return del_minus(frame, f);
    case OperatorKind::delPlusDelMinus: return del_plus(frame, del_minus(frame, f));
    default: return adjoint(frame, kind, f);
  }
}

Form laplacian(const DarbouxFrame& frame, LaplacianKind which, const Form& f) {
  require_frame(frame, f);
  int n = f.n(), k = f.degree();
  if (!is_primitive(frame, f)) throw std::domain_error("Laplacians act on primitive forms");
  bool middle = which == LaplacianKind::plusplus || which == LaplacianKind::minusminus;
  if (middle ? k != n : (k < 0 || k >= n)) throw std::domain_error("Laplacian degree out of range");
  switch (which) {
    case LaplacianKind::plus:
      return del_plus(frame, del_plus_star(frame, f)) + del_plus_star(frame, del_plus(frame, f));
    case LaplacianKind::minus:
      return del_minus(frame, del_minus_star(frame, f)) + del_minus_star(frame, del_minus(frame, f));
    case LaplacianKind::plusplus: {
      Form pm = apply_operator(frame, OperatorKind::delPlusDelMinus, f);
      Form a = adjoint(frame, OperatorKind::delPlusDelMinusStar, pm);
      Form b = del_plus(frame, del_plus_star(frame, f));
      return a + del_plus(frame, del_plus_star(frame, b));
    }
    case LaplacianKind::minusminus: {
      Form s = adjoint(frame, OperatorKind::delPlusDelMinusStar, f);
      Form a = apply_operator(frame, OperatorKind::delPlusDelMinus, s);
      Form b = del_minus_star(frame, del_minus(frame, f));
      return a + del_minus_star(frame, del_minus(frame, b));
    }
  }
  return f;
}

}  // namespace symbc
