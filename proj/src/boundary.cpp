#include "symbc/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbc {

namespace {

Poly normal_square(const VectorField& v) {
  Poly out;
  for (const auto& c : v) out += c * c;
  return out;
}

BoundaryComponent make_component(int n, std::string name, Poly rho) {
  BoundaryComponent c{std::move(name), rho, VectorField(2 * n), exterior_d(Form::function(n, rho))};
  for (const auto& [w, p] : c.drho.terms()) c.normal[w.indices().front()] = p;
  if (!poly_divisible(normal_square(c.normal) - Poly(1), rho))
    throw std::invalid_argument("boundary defining function " + rho.to_string() + " is not unit-normalized");
  return c;
}

OperatorKind second_order_operator(BcKind kind) {
  switch (kind) {
    case BcKind::DplusMinus:
    case BcKind::DplusPlus: return OperatorKind::delPlusDelMinus;
    case BcKind::NplusMinus:
    case BcKind::NminusMinus: return OperatorKind::delPlusDelMinusStar;
    default: throw std::invalid_argument("not a second-order boundary condition: " + to_string(kind));
  }
}

OperatorKind first_order_operator(BcKind kind) {
  switch (kind) {
    case BcKind::D: return OperatorKind::d;
    case BcKind::N: return OperatorKind::dStar;
    case BcKind::JD: return OperatorKind::dLambdaStar;
    case BcKind::JN: return OperatorKind::dLambda;
    case BcKind::Dplus: return OperatorKind::delPlus;
    case BcKind::Nplus: return OperatorKind::delPlusStar;
    case BcKind::Dminus: return OperatorKind::delMinus;
    case BcKind::Nminus: return OperatorKind::delMinusStar;
    default: throw std::invalid_argument("not a first-order boundary condition: " + to_string(kind));
  }
}

Form first_order_residual(const DarbouxFrame& frame, OperatorKind kind, const Form& f, const BoundaryComponent& comp) {
  if (operator_order(kind) != 1) throw std::invalid_argument("operator is not first order: " + to_string(kind));
  return apply_operator(frame, kind, f.times(comp.rho));
}

Form second_order_residual(const DarbouxFrame& frame, BcKind kind, const Form& f, const BoundaryComponent& comp) {
  return apply_operator(frame, second_order_operator(kind), f.times(comp.rho * comp.rho));
}

Form differential_residual(const DarbouxFrame& frame, BcKind kind, const Form& f, const BoundaryComponent& comp) {
  OperatorKind op = second_order_operator(kind);
  Form once = apply_operator(frame, op, f.times(comp.rho));
  Form twice = apply_operator(frame, op, f.times(comp.rho * comp.rho));
  return once * Scalar(2) - lie_derivative(comp.normal, twice) * Scalar(1, 2);
}

}  // namespace

ManifoldDescriptor::ManifoldDescriptor(std::string name, std::vector<Factor> factors, DarbouxFrame frame)
    : name_(std::move(name)), factors_(std::move(factors)), frame_(std::move(frame)) {
  int n = frame_.n();
  std::vector<int> seen(2 * n, 0);
  for (const auto& fac : factors_) {
    std::size_t want = fac.kind == FactorKind::Interval ? 1 : fac.kind == FactorKind::Ball3 ? 3 : 0;
    if (want && fac.vars.size() != want) throw std::invalid_argument("factor has the wrong number of coordinates");
    if (fac.vars.empty()) throw std::invalid_argument("factor without coordinates");
    for (int v : fac.vars) {
      if (v < 0 || v >= 2 * n) throw std::invalid_argument("factor coordinate out of range");
      ++seen[v];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw std::invalid_argument("every coordinate must belong to exactly one factor");

  for (const auto& fac : factors_) {
    switch (fac.kind) {
      case FactorKind::Interval: {
        Poly x = Poly::variable(fac.vars[0]);
        std::string v = variable_name(fac.vars[0]);
        boundary_.push_back(make_component(n, v + "=0", x));
        boundary_.push_back(make_component(n, v + "=1", Poly(1) - x));
        break;
      }
      case FactorKind::Ball3: {
        Poly r2;
        for (int v : fac.vars) r2 += Poly::variable(v) * Poly::variable(v);
        std::string label = "|(" + variable_name(fac.vars[0]) + "," + variable_name(fac.vars[1]) + "," +
                            variable_name(fac.vars[2]) + ")|=1";
        boundary_.push_back(make_component(n, label, (Poly(1) - r2) * Scalar(1, 2)));
        break;
      }
      case FactorKind::TorusCoord:
        periodic_.insert(periodic_.end(), fac.vars.begin(), fac.vars.end());
        break;
    }
  }
  std::sort(periodic_.begin(), periodic_.end());
}

bool ManifoldDescriptor::is_manifold_form(const Form& f) const {
  if (f.n() != n()) return false;
  for (const auto& [w, p] : f.terms())
    for (int v : periodic_)
      if (p.depends_on(v)) return false;
  return true;
}

void ManifoldDescriptor::require_manifold_form(const Form& f) const {
  if (f.n() != n()) throw std::invalid_argument("form dimension does not match the manifold");
  if (!is_manifold_form(f))
    throw std::invalid_argument("coefficients depend on a periodic coordinate; the form is not defined on " + name_);
}

std::string to_string(BcKind kind) {
  switch (kind) {
    case BcKind::D: return "D";
    case BcKind::N: return "N";
    case BcKind::JD: return "JD";
    case BcKind::JN: return "JN";
    case BcKind::Dplus: return "Dplus";
    case BcKind::Nplus: return "Nplus";
    case BcKind::Dminus: return "Dminus";
    case BcKind::Nminus: return "Nminus";
    case BcKind::DplusMinus: return "DplusMinus";
    case BcKind::NplusMinus: return "NplusMinus";
    case BcKind::DplusPlus: return "DplusPlus";
    case BcKind::NminusMinus: return "NminusMinus";
  }
  return "?";
}

const std::vector<BcKind>& all_bc_kinds() {
  static const std::vector<BcKind> kinds = {
      BcKind::D,      BcKind::N,      BcKind::JD,         BcKind::JN,         BcKind::Dplus,     BcKind::Nplus,
      BcKind::Dminus, BcKind::Nminus, BcKind::DplusMinus, BcKind::NplusMinus, BcKind::DplusPlus, BcKind::NminusMinus};
  return kinds;
}

std::optional<BcKind> bc_from_string(const std::string& s) {
  for (BcKind k : all_bc_kinds())
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool vanishes_on(const Form& f, const BoundaryComponent& comp) {
  if (comp.rho.is_zero()) return f.is_zero();
  return vanishes_mod(f, comp.rho);
}

bool first_order_condition(const DarbouxFrame& frame, OperatorKind kind, const Form& f,
                           const BoundaryComponent& comp) {
  return vanishes_on(first_order_residual(frame, kind, f, comp), comp);
}

bool second_order_condition(const DarbouxFrame& frame, BcKind kind, const Form& f, const BoundaryComponent& comp) {
  if (kind != BcKind::DplusMinus && kind != BcKind::NplusMinus)
    throw std::invalid_argument("second_order_condition takes DplusMinus or NplusMinus");
  return vanishes_on(second_order_residual(frame, kind, f, comp), comp);
}

bool full_second_order_condition(const DarbouxFrame& frame, BcKind kind, const Form& f,
                                 const BoundaryComponent& comp) {
  if (kind != BcKind::DplusPlus && kind != BcKind::NminusMinus)
    throw std::invalid_argument("full_second_order_condition takes DplusPlus or NminusMinus");
  return vanishes_on(second_order_residual(frame, kind, f, comp), comp) &&
         vanishes_on(differential_residual(frame, kind, f, comp), comp);
}

ComponentVerdict check_bc_component(const DarbouxFrame& frame, BcKind kind, const Form& f,
                                    const BoundaryComponent& comp) {
  ComponentVerdict v{comp.name, true, std::nullopt};
  auto test = [&](const Form& residual) {
    if (v.holds && !vanishes_on(residual, comp)) {
      v.holds = false;
      v.residual = residual;
    }
  };
  switch (kind) {
    case BcKind::DplusMinus:
    case BcKind::NplusMinus:
      test(second_order_residual(frame, kind, f, comp));
      break;
    case BcKind::DplusPlus:
    case BcKind::NminusMinus:
      test(second_order_residual(frame, kind, f, comp));
      test(differential_residual(frame, kind, f, comp));
      break;
    default:
      test(first_order_residual(frame, first_order_operator(kind), f, comp));
  }
  return v;
}

BcVerdict evaluate_bc(BcKind kind, const Form& f, const ManifoldDescriptor& manifold) {
  manifold.require_manifold_form(f);
  BcVerdict out;
  for (const auto& comp : manifold.boundary()) {
    out.components.push_back(check_bc_component(manifold.frame(), kind, f, comp));
    out.holds = out.holds && out.components.back().holds;
  }
  return out;
}

bool check_bc(BcKind kind, const Form& f, const ManifoldDescriptor& manifold) {
  return evaluate_bc(kind, f, manifold).holds;
}

LocalFrame local_frame(const DarbouxFrame& frame, const BoundaryComponent& comp) {
  const Form& dr = comp.drho;
  if (!dr.is_constant() || dr.terms().size() != 1)
    throw std::invalid_argument("local decomposition needs a component with constant d(rho) (interval ends)");
  const auto& [w, p] = *dr.terms().begin();
  Scalar c = p.constant_term();
  if (c != Scalar(1) && c != Scalar(-1)) throw std::invalid_argument("d(rho) is not a unit coframe element");
  int idx = w.indices().front();
  int s = c == Scalar(1) ? 1 : -1;
  LocalFrame lf;
  for (const auto& [a, b] : frame.pairs()) {
    if (a == idx) {
      lf.w1 = a, lf.s1 = s, lf.w2 = b, lf.s2 = s;
    } else if (b == idx) {
      lf.w1 = b, lf.s1 = s, lf.w2 = a, lf.s2 = -s;
    } else {
      lf.rest.emplace_back(a, b);
    }
  }
  return lf;
}

Form LocalDecomposition::theta12(int n) const {
  Form w12 = Form::differential(n, local.w1) * Scalar(local.s1 * local.s2);
  w12 = wedge(w12, Form::differential(n, local.w2));
  Form omega_rest(n, 2);
  for (const auto& [a, b] : local.rest) omega_rest += wedge(Form::differential(n, a), Form::differential(n, b));
  return w12 - omega_rest * theta_c;
}

Form LocalDecomposition::reconstruct() const {
  int n = beta1.n();
  Form w1 = Form::differential(n, local.w1) * Scalar(local.s1);
  Form w2 = Form::differential(n, local.w2) * Scalar(local.s2);
  return wedge(w1, beta1) + wedge(w2, beta2) + wedge(theta12(n), beta3) + beta4;
}

LocalDecomposition local_decompose(const DarbouxFrame& frame, const Form& beta, const BoundaryComponent& comp) {
  if (!is_primitive(frame, beta)) throw std::invalid_argument("local decomposition needs a primitive form");
  int n = beta.n(), k = beta.degree();
  LocalDecomposition dec;
  dec.local = local_frame(frame, comp);
  const LocalFrame& lf = dec.local;
  Form w1 = Form::differential(n, lf.w1) * Scalar(lf.s1);
  Form w2 = Form::differential(n, lf.w2) * Scalar(lf.s2);
  auto iota1 = [&](const Form& f) { return contract(lf.w1, f) * Scalar(lf.s1); };
  auto iota2 = [&](const Form& f) { return contract(lf.w2, f) * Scalar(lf.s2); };

  Form C = iota2(iota1(beta));
  Form A = iota1(beta) - wedge(w2, C);
  Form B = iota2(beta) + wedge(w1, C);
  Form D = beta - wedge(w1, A) - wedge(w2, B) - wedge(wedge(w1, w2), C);

  Form omega_rest(n, 2);
  for (const auto& [a, b] : lf.rest) omega_rest += wedge(Form::differential(n, a), Form::differential(n, b));
  Form x = dual_Lambda(frame, wedge(wedge(w1, w2), C));
  Form y = dual_Lambda(frame, wedge(omega_rest, C));
  if (C.is_zero()) {
    dec.theta_c = Scalar(1, n - k + 1);
  } else {
    const auto& [w, p] = *y.terms().begin();
    Poly px = x.coefficient(w);
    // x = c * y with c a constant: compare leading coefficients.
    dec.theta_c = px.terms().front().second * p.terms().front().second.inverse();
    if (x != y * dec.theta_c) throw std::logic_error("Theta12 coefficient is not a constant");
  }
  dec.beta1 = A;
  dec.beta2 = B;
  dec.beta3 = C;
  dec.beta4 = D + wedge(omega_rest, C) * dec.theta_c;
  return dec;
}

Form PrimedOps::e_derivative(int which, const Form& f) const {
  return which == 1 ? partial(local.w1, f) * Scalar(local.s1) : partial(local.w2, f) * Scalar(local.s2);
}

Form PrimedOps::d(const Form& f) const {
  int n = f.n();
  return exterior_d(f) - wedge(Form::differential(n, local.w1), partial(local.w1, f)) -
         wedge(Form::differential(n, local.w2), partial(local.w2, f));
}

Form PrimedOps::d_star(const Form& f) const {
  return symbc::d_star(frame, f) + contract(local.w1, partial(local.w1, f)) +
         contract(local.w2, partial(local.w2, f));
}

Form PrimedOps::L(const Form& f) const {
  Form omega_rest(f.n(), 2);
  for (const auto& [a, b] : local.rest)
    omega_rest += wedge(Form::differential(f.n(), a), Form::differential(f.n(), b));
  return wedge(omega_rest, f);
}

Form PrimedOps::Lambda(const Form& f) const { return pair_contraction(local.rest, f); }

Form PrimedOps::del_minus(const Form& f) const {
  int np = static_cast<int>(local.rest.size()), k = f.degree();
  if (np - k + 1 <= 0) return Form(f.n(), k - 1);
  return Lambda(d(f)) * Scalar(1, np - k + 1);
}

Form PrimedOps::del_plus(const Form& f) const { return d(f) - L(del_minus(f)); }

Form PrimedOps::del_plus_star(const Form& f) const { return d_star(f); }

Form PrimedOps::del_minus_star(const Form& f) const {
  int np = static_cast<int>(local.rest.size()), k = f.degree();
  if (k >= np) return Form(f.n(), k + 1);
  return d_star(L(f)) * Scalar(1, np - k) - L(d_star(f)) * Scalar(1, np - k + 1);
}

CrosscheckResult local_form_crosscheck(const DarbouxFrame& frame, const Form& beta, BcKind kind,
                                   const BoundaryComponent& comp) {
  int n = beta.n(), k = beta.degree();
  LocalDecomposition dec = local_decompose(frame, beta, comp);
  auto zero = [&](std::initializer_list<const Form*> forms) {
    return std::all_of(forms.begin(), forms.end(), [&](const Form* f) { return vanishes_on(*f, comp); });
  };
  const Form &b1 = dec.beta1, &b2 = dec.beta2, &b3 = dec.beta3, &b4 = dec.beta4;
  PrimedOps primed{frame, dec.local};
  CrosscheckResult out;
  switch (kind) {
    case BcKind::D: out.table_holds = zero({&b2, &b3, &b4}); break;
    case BcKind::N:
    case BcKind::Nplus: out.table_holds = zero({&b1, &b3}); break;
    case BcKind::JD: out.table_holds = zero({&b1, &b3, &b4}); break;
    case BcKind::JN:
    case BcKind::Dminus: out.table_holds = zero({&b2, &b3}); break;
    // Both conditions are empty in the middle degree.
    case BcKind::Dplus: out.table_holds = k >= n || zero({&b2, &b4}); break;
    case BcKind::Nminus: out.table_holds = k >= n || zero({&b1, &b4}); break;
    case BcKind::DplusMinus: out.table_holds = zero({&b2}); break;
    case BcKind::NplusMinus: out.table_holds = zero({&b1}); break;
    case BcKind::DplusPlus: {
      // H is the primed degree operator on beta3.
      out.applicable = k == n;
      int h3 = n - 1 - b3.degree();
      Form expr = primed.e_derivative(1, b2) - primed.e_derivative(2, b1) +
                  (h3 > 0 ? primed.del_plus(b3) * Scalar(h3 + 1, h3) : Form(n, k - 1)) + primed.del_minus(b4) * Scalar(n - 1 - b4.degree() - 1);
      out.table_holds = zero({&b2}) && vanishes_on(expr, comp);
      break;
    }
    case BcKind::NminusMinus: {
      out.applicable = k == n;
      int h3 = n - 1 - b3.degree();
      Form expr = primed.e_derivative(1, b1) + primed.e_derivative(2, b2) +
                  primed.del_minus_star(b3) * Scalar(h3 + 1) - primed.del_plus_star(b4);
      out.table_holds = zero({&b1}) && vanishes_on(expr, comp);
      break;
    }
  }
  out.check_holds = check_bc_component(frame, kind, beta, comp).holds;
  return out;
}

}  // namespace symbc
