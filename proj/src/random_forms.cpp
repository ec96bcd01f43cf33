#include "symbc/random_forms.hpp"

#include <stdexcept>

#include "symbc/symplectic.hpp"

namespace symbc {

int FormGenerator::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Poly FormGenerator::random_poly(const std::vector<int>& vars, int max_degree, int max_terms) {
  Poly p;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    if (!vars.empty()) {
      int deg = uniform(0, max_degree);
      for (int i = 0; i < deg; ++i) m.exp[vars[uniform(0, static_cast<int>(vars.size()) - 1)]] += 1;
    }
    int c = uniform(1, 5) * (uniform(0, 1) ? 1 : -1);
    p += Poly::monomial(m, Scalar(c));
  }
  return p;
}

Form FormGenerator::random_form(int n, int k, const std::vector<int>& vars) {
  const auto& basis = wedge_basis(n, k);
  Form f(n, k);
  if (basis.empty()) return f;
  int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    Wedge w = basis[uniform(0, static_cast<int>(basis.size()) - 1)];
    f.add_term(w, random_poly(vars));
  }
  return f;
}

Form FormGenerator::random_primitive(const DarbouxFrame& frame, int k, const std::vector<int>& vars) {
  if (k < 0 || k > frame.n()) throw std::invalid_argument("primitive degree out of range");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Form beta = project_Pi(frame, random_form(frame.n(), k, vars));
    if (!beta.is_zero()) return beta;
  }
  throw std::runtime_error("could not draw a non-zero primitive form");
}

std::vector<int> FormGenerator::all_vars(int n) {
  std::vector<int> v;
  for (int j = 0; j < 2 * n; ++j) v.push_back(j);
  return v;
}

}  // namespace symbc
