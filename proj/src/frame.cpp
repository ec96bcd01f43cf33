#include "symbc/frame.hpp"

#include <stdexcept>
#include <string>

#include "symbc/exterior.hpp"

namespace symbc {

namespace {

Form constant_from_coords(int n, int k, const std::vector<Scalar>& v) {
  Form f(n, k);
  const auto& basis = wedge_basis(n, k);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) f.add_term(basis[i], Poly(v[i]));
  return f;
}

std::vector<Scalar> coords_of_constant(const Form& f) {
  std::vector<Scalar> v(wedge_basis(f.n(), f.degree()).size());
  for (const auto& [w, p] : f.terms()) {
    if (!p.is_constant()) throw std::logic_error("expected a constant form");
    v[wedge_index(f.n(), w)] = p.constant_term();
  }
  return v;
}

// Matrix of a linear operator on constant forms, Lambda^k -> Lambda^{k'}.
template <class Op>
Matrix operator_matrix(int n, int k, int k_out, Op op) {
  const auto& src = wedge_basis(n, k);
  Matrix M(static_cast<int>(wedge_basis(n, k_out).size()), static_cast<int>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    Form img = op(Form::monomial(n, src[c], Poly(1)));
    auto v = coords_of_constant(img);
    for (std::size_t r = 0; r < v.size(); ++r) M.at(static_cast<int>(r), static_cast<int>(c)) = v[r];
  }
  return M;
}

// dz/dz-bar route: w_a -> (e_a + e_b)/2, w_b -> -i*s*(e_a - e_b)/2, where the
// slots e_a, e_b hold dz, dz-bar; weight i^{p-q}; then map back.
Matrix conjugation_matrix(int n, const std::vector<std::pair<int, int>>& pairs, int jsign, int k) {
  Scalar half(1, 2);
  Scalar i = Scalar::imaginary_unit();
  Scalar s(jsign);
  Matrix to_complex(2 * n, 2 * n), from_complex(2 * n, 2 * n);
  std::vector<int> slot_type(2 * n, 0);  // +1 for dz slots, -1 for dz-bar
  for (const auto& [a, b] : pairs) {
    to_complex.at(a, a) = half;
    to_complex.at(b, a) = half;
    to_complex.at(a, b) = -i * s * half;
    to_complex.at(b, b) = i * s * half;
    from_complex.at(a, a) = Scalar(1);
    from_complex.at(b, a) = i * s;
    from_complex.at(a, b) = Scalar(1);
    from_complex.at(b, b) = -i * s;
    slot_type[a] = 1;
    slot_type[b] = -1;
  }
  return operator_matrix(n, k, k, [&](const Form& f) {
    Form z = coframe_transform(to_complex, f);
    Form weighted(n, k);
    for (const auto& [w, p] : z.terms()) {
      int pq = 0;
      for (int j : w.indices()) pq += slot_type[j];
      int e = ((pq % 4) + 4) % 4;
      Scalar factor = e == 0 ? Scalar(1) : e == 1 ? i : e == 2 ? Scalar(-1) : -i;
      weighted.add_term(w, p * factor);
    }
    return coframe_transform(from_complex, weighted);
  });
}

}  // namespace

DarbouxFrame::DarbouxFrame(int n, std::vector<std::pair<int, int>> pairs, int jsign) {
  if (n < 1 || n > 4) throw std::invalid_argument("half-dimension must be in 1..4");
  if (jsign != 1 && jsign != -1) throw std::invalid_argument("jsign must be +1 or -1");
  if (static_cast<int>(pairs.size()) != n) throw std::invalid_argument("need exactly n pairs");
  std::vector<bool> seen(2 * n, false);
  for (const auto& [a, b] : pairs) {
    for (int j : {a, b}) {
      if (j < 0 || j >= 2 * n || seen[j]) throw std::invalid_argument("pairs must partition the coframe");
      seen[j] = true;
    }
  }
  auto d = std::make_shared<Data>();
  d->n = n;
  d->pairs = std::move(pairs);
  d->jsign = jsign;

  Form omega(n, 2);
  for (const auto& [a, b] : d->pairs)
    omega += wedge(Form::differential(n, a), Form::differential(n, b));
  d->omega_powers.push_back(Form::constant(n, Scalar(1)));
  for (int r = 1; r <= n; ++r) d->omega_powers.push_back(wedge(d->omega_powers.back(), omega));

  Scalar factorial(1);
  for (int r = 2; r <= n; ++r) factorial *= Scalar(r);
  const Form& top = d->omega_powers[n];
  if (top.is_zero()) throw std::invalid_argument("degenerate symplectic form");
  Scalar top_coef = top.terms().begin()->second.constant_term() / factorial;
  if (top_coef == Scalar(1)) {
    d->vol_sign = 1;
  } else if (top_coef == Scalar(-1)) {
    d->vol_sign = -1;
  } else {
    throw std::logic_error("omega^n/n! is not a unit volume form");
  }

  auto lambda = [&](const Form& f) { return pair_contraction(d->pairs, f); };
  std::vector<std::vector<Form>> primitive_basis(n + 1);
  for (int s = 0; s <= n; ++s) {
    Matrix lam = operator_matrix(n, s, s - 2, lambda);
    if (s < 2) {
      for (const auto& w : wedge_basis(n, s)) primitive_basis[s].push_back(Form::monomial(n, w, Poly(1)));
    } else {
      for (const auto& v : lam.nullspace()) primitive_basis[s].push_back(constant_from_coords(n, s, v));
    }
  }

  for (int k = 0; k <= 2 * n; ++k) {
    std::vector<DecompositionBlock> blocks;
    std::vector<std::vector<Scalar>> columns;
    for (int r = std::max(k - n, 0); 2 * r <= k; ++r) {
      int s = k - 2 * r;
      DecompositionBlock blk{r, s, primitive_basis[s]};
      for (const auto& p : blk.primitives) columns.push_back(coords_of_constant(wedge(d->omega_powers[r], p)));
      blocks.push_back(std::move(blk));
    }
    int dim = static_cast<int>(wedge_basis(n, k).size());
    if (static_cast<int>(columns.size()) != dim)
      throw std::logic_error("Lefschetz basis has wrong size in degree " + std::to_string(k));
    Matrix B(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) B.at(r, c) = columns[c][r];
    d->decomposition_inverse.push_back(B.inverse());
    d->blocks.push_back(std::move(blocks));
    d->conjugation.push_back(conjugation_matrix(n, d->pairs, jsign, k));
  }
  data_ = std::move(d);
}

DarbouxFrame DarbouxFrame::standard(int n, int jsign) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
  return DarbouxFrame(n, std::move(pairs), jsign);
}

Form DarbouxFrame::omega_power(int r) const {
  if (r < 0) throw std::invalid_argument("negative power of omega");
  if (r > n()) return Form(n(), 2 * r);
  return data_->omega_powers[r];
}

}  // namespace symbc
