#include "symbc/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symbc {

namespace {

mpq_class factorial(int m) {
  mpz_class out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return mpq_class(out);
}

// Gamma(m + 1/2) / sqrt(pi)
mpq_class half_gamma(int m) {
  mpq_class four_pow = 1;
  for (int i = 0; i < m; ++i) four_pow *= 4;
  return factorial(2 * m) / (four_pow * factorial(m));
}

int rank_of(const LefschetzMatrixSet& mats, int j) {
  if (j < 0 || j >= static_cast<int>(mats.matrices.size())) return 0;
  return mats.matrices[j].rank();
}

int dim_at(const std::vector<int>& dims, int j) {
  return j < 0 || j >= static_cast<int>(dims.size()) ? 0 : dims[j];
}

int alternating(const std::vector<int>& v) {
  int s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k % 2 ? -1 : 1) * v[k];
  return s;
}

// Ranks of L on an index range given as a function; shared by both routes.
PhDims ph_from_ranks(int n, const std::vector<int>& dims, const std::function<int(int)>& rank) {
  auto coker = [&](int j) { return j < 0 || j + 2 > 2 * n ? dim_at(dims, j + 2) : dim_at(dims, j + 2) - rank(j); };
  auto ker = [&](int j) { return j < 0 || j > 2 * n ? 0 : dim_at(dims, j) - rank(j); };
  PhDims out;
  for (int k = 0; k <= n; ++k) {
    out.plus.push_back(coker(k - 2) + ker(k - 1));
    out.minus.push_back(coker(2 * n - k - 1) + ker(2 * n - k));
  }
  return out;
}

}  // namespace

std::vector<int> GradedBasis::dims() const {
  std::vector<int> out;
  for (const auto& d : degrees) out.push_back(static_cast<int>(d.size()));
  return out;
}

KunnethResult kunneth_cohomology(const ManifoldDescriptor& m) {
  int n = m.n();
  const auto& periodic = m.periodic_vars();
  KunnethResult out;
  out.absolute.n = n;
  out.absolute.degrees.resize(2 * n + 1);
  int p = static_cast<int>(periodic.size());
  std::vector<Wedge> wedges;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    Wedge w;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) w.bits |= static_cast<std::uint16_t>(1u << periodic[i]);
    wedges.push_back(w);
  }
  std::sort(wedges.begin(), wedges.end(), WedgeLess{});
  for (Wedge w : wedges) out.absolute.degrees[w.degree()].push_back(Form::monomial(n, w, Poly(1)));
  auto dims = out.absolute.dims();
  for (int k = 0; k <= 2 * n; ++k) out.relative_dims.push_back(dims[2 * n - k]);
  return out;
}

OmegaReduction omega_const(const ManifoldDescriptor& m, const Form& omega) {
  int n = m.n();
  const auto& periodic = m.periodic_vars();
  auto is_periodic = [&](int v) { return std::binary_search(periodic.begin(), periodic.end(), v); };
  if (omega.degree() != 2 || !omega.is_constant()) throw std::invalid_argument("omega must be a constant 2-form");
  OmegaReduction out{Form(n, 2), {}};
  for (const auto& [w, p] : omega.terms()) {
    auto idx = w.indices();
    int a = idx[0], b = idx[1];
    Form term = Form::monomial(n, w, p);
    if (is_periodic(a) && is_periodic(b)) {
      out.omega_const += term;
      continue;
    }
    // c dw_a ^ dw_b = d(c x_a dw_b) = d(-c x_b dw_a)
    Form potential = is_periodic(a) ? Form::monomial(n, Wedge{static_cast<std::uint16_t>(1u << a)},
                                                     -(p * Poly::variable(b)))
                                    : Form::monomial(n, Wedge{static_cast<std::uint16_t>(1u << b)},
                                                     p * Poly::variable(a));
    if (exterior_d(potential) != term) throw std::logic_error("exactness certificate failed for " + term.to_string());
    out.certificates.push_back({term, potential});
  }
  return out;
}

LefschetzMatrixSet lefschetz_matrices(const GradedBasis& basis, const Form& omega_c) {
  int n = basis.n;
  LefschetzMatrixSet out;
  for (int k = 0; k + 2 <= 2 * n; ++k) {
    const auto& src = basis.degrees[k];
    const auto& dst = basis.degrees[k + 2];
    Matrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      Form img = wedge(omega_c, src[c]);
      for (const auto& [w, p] : img.terms()) {
        auto it = std::find_if(dst.begin(), dst.end(),
                               [&](const Form& f) { return f.terms().size() == 1 && f.terms().begin()->first == w; });
        if (it == dst.end() || !p.is_constant())
          throw std::logic_error("L image outside the span of the degree " + std::to_string(k + 2) + " basis");
        int r = static_cast<int>(it - dst.begin());
        mat.at(r, static_cast<int>(c)) += p.constant_term() * it->terms().begin()->second.constant_term().inverse();
      }
    }
    out.matrices.push_back(mat);
  }
  return out;
}

PhDims ph_dims_absolute(const LefschetzMatrixSet& mats, const std::vector<int>& dims) {
  int n = (static_cast<int>(dims.size()) - 1) / 2;
  return ph_from_ranks(n, dims, [&](int j) { return rank_of(mats, j); });
}

PhDims ph_dims_relative(const LefschetzMatrixSet& mats, const std::vector<int>& dims) {
  int n = (static_cast<int>(dims.size()) - 1) / 2;
  std::vector<int> rel;
  for (int k = 0; k <= 2 * n; ++k) rel.push_back(dims[2 * n - k]);
  // L_rel on H^j(M, dM) is dual to L on H^{2n-j-2}(M).
  return ph_from_ranks(n, rel, [&](int j) { return rank_of(mats, 2 * n - j - 2); });
}

CohomologyTable cohomology_table(const ManifoldDescriptor& m) {
  auto kun = kunneth_cohomology(m);
  auto red = omega_const(m, m.frame().omega());
  auto mats = lefschetz_matrices(kun.absolute, red.omega_const);
  CohomologyTable t;
  t.de_rham_abs = kun.absolute.dims();
  t.de_rham_rel = kun.relative_dims;
  auto abs = ph_dims_absolute(mats, t.de_rham_abs);
  auto rel = ph_dims_relative(mats, t.de_rham_abs);
  t.ph_plus_abs = abs.plus;
  t.ph_minus_abs = abs.minus;
  t.ph_plus_rel = rel.plus;
  t.ph_minus_rel = rel.minus;
  t.routes_agree = rel.plus == abs.minus && rel.minus == abs.plus;
  return t;
}

IndexPair euler_index(const CohomologyTable& table) {
  return {alternating(table.ph_plus_abs) - alternating(table.ph_minus_abs),
          alternating(table.ph_plus_rel) - alternating(table.ph_minus_rel)};
}

PiValue::PiValue(const Scalar& c, int pi_power) {
  if (!c.is_zero()) coeffs_[pi_power] = c;
}

int PiValue::max_power() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Scalar PiValue::evaluate_at(const Scalar& t) const {
  Scalar out;
  for (const auto& [p, c] : coeffs_) {
    Scalar term = c;
    for (int i = 0; i < p; ++i) term *= t;
    out += term;
  }
  return out;
}

PiValue& PiValue::operator+=(const PiValue& o) {
  for (const auto& [p, c] : o.coeffs_) {
    Scalar s = coeffs_[p] + c;
    if (s.is_zero())
      coeffs_.erase(p);
    else
      coeffs_[p] = s;
  }
  return *this;
}

PiValue& PiValue::operator*=(const PiValue& o) {
  PiValue out;
  for (const auto& [p, c] : coeffs_)
    for (const auto& [q, d] : o.coeffs_) out += PiValue(c * d, p + q);
  return *this = out;
}

std::string PiValue::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.to_string();
    if (it->first == 1) out += "*pi";
    if (it->first > 1) out += "*pi**" + std::to_string(it->first);
  }
  return out;
}

PiValue integrate_top(const ManifoldDescriptor& m, const Form& f) {
  int n = m.n();
  if (f.n() != n || f.degree() != 2 * n) throw std::invalid_argument("integrate_top needs a top-degree form");
  m.require_manifold_form(f);
  PiValue total;
  for (const auto& [w, p] : f.terms()) {
    for (const auto& [mono, c] : p.terms()) {
      PiValue v(c * Scalar(m.frame().vol_sign()));
      for (const auto& fac : m.factors()) {
        if (fac.kind == FactorKind::Interval) {
          v *= PiValue(Scalar(mpq_class(1, mono.exp[fac.vars[0]] + 1)));
        } else if (fac.kind == FactorKind::Ball3) {
          int half_sum = 0;
          mpq_class num = 1;
          bool odd = false;
          for (int var : fac.vars) {
            int a = mono.exp[var];
            if (a % 2) odd = true;
            num *= half_gamma(a / 2);
            half_sum += a / 2;
          }
          // prod Gamma((a_i+1)/2) / Gamma(|a|/2 + 5/2), one net factor of pi
          v *= odd ? PiValue() : PiValue(Scalar(num / half_gamma(half_sum + 2)), 1);
        }
      }
      total += v;
    }
  }
  return total;
}

PiMatrix pairing_matrix(const ManifoldDescriptor& m, int k, const std::vector<Form>& plus_basis,
                        const std::vector<Form>& minus_rel_basis) {
  int n = m.n();
  const auto& frame = m.frame();
  Form omega_part = frame.omega_power(n - k) * Scalar(mpq_class(1) / factorial(n - k));
  Scalar sign((k * (k + 1) / 2) % 2 ? -1 : 1);
  PiMatrix out;
  for (const auto& beta : plus_basis) {
    std::vector<PiValue> row;
    for (const auto& lambda : minus_rel_basis)
      row.push_back(integrate_top(m, wedge(wedge(omega_part, beta), lambda)) * PiValue(sign));
    out.push_back(std::move(row));
  }
  return out;
}

int pi_rank(const PiMatrix& mat) {
  if (mat.empty() || mat[0].empty()) return 0;
  int rows = static_cast<int>(mat.size()), cols = static_cast<int>(mat[0].size());
  int degree = 0;
  for (const auto& row : mat)
    for (const auto& v : row) degree = std::max(degree, v.max_power());
  // A nonzero r x r minor has degree at most r*degree in pi, so one of
  // r*degree + 1 distinct sample points avoids its roots.
  int samples = std::min(rows, cols) * degree + 1;
  int best = 0;
  for (int s = 1; s <= samples; ++s) {
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = mat[i][j].evaluate_at(Scalar(s));
    best = std::max(best, a.rank());
  }
  return best;
}

}  // namespace symbc
