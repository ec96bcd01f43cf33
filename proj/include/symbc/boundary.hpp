#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbc/exterior.hpp"
#include "symbc/frame.hpp"
#include "symbc/symplectic.hpp"

namespace symbc {

enum class FactorKind { Interval, Ball3, TorusCoord };

struct Factor {
  FactorKind kind;
  std::vector<int> vars;  // variable indices (0-based: x1, y1, x2, ...)
};

// rho vanishes exactly on the component; normal is the metric dual of d(rho),
// which points inward.
struct BoundaryComponent {
  std::string name;
  Poly rho;
  VectorField normal;
  Form drho;
};

class ManifoldDescriptor {
 public:
  ManifoldDescriptor(std::string name, std::vector<Factor> factors, DarbouxFrame frame);

  const std::string& name() const { return name_; }
  int n() const { return frame_.n(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const DarbouxFrame& frame() const { return frame_; }
  const std::vector<BoundaryComponent>& boundary() const { return boundary_; }
  const std::vector<int>& periodic_vars() const { return periodic_; }

  // Coefficients may only depend on non-periodic coordinates.
  bool is_manifold_form(const Form& f) const;
  void require_manifold_form(const Form& f) const;

 private:
  std::string name_;
  std::vector<Factor> factors_;
  DarbouxFrame frame_;
  std::vector<BoundaryComponent> boundary_;
  std::vector<int> periodic_;
};

enum class BcKind {
  D,
  N,
  JD,
  JN,
  Dplus,
  Nplus,
  Dminus,
  Nminus,
  DplusMinus,
  NplusMinus,
  DplusPlus,
  NminusMinus,
};

std::string to_string(BcKind kind);
std::optional<BcKind> bc_from_string(const std::string& s);
const std::vector<BcKind>& all_bc_kinds();

bool vanishes_on(const Form& f, const BoundaryComponent& comp);

// P(rho f) restricted to the component; P must be first order.
bool first_order_condition(const DarbouxFrame& frame, OperatorKind kind, const Form& f,
                           const BoundaryComponent& comp);
// kind is DplusMinus or NplusMinus: P(rho^2 f) vanishes on the component.
bool second_order_condition(const DarbouxFrame& frame, BcKind kind, const Form& f,
                            const BoundaryComponent& comp);
// kind is DplusPlus or NminusMinus: the condition above plus
// {2 P(rho f) - 1/2 L_n[P(rho^2 f)]} vanishing on the component.
bool full_second_order_condition(const DarbouxFrame& frame, BcKind kind, const Form& f,
                                 const BoundaryComponent& comp);

struct ComponentVerdict {
  std::string component;
  bool holds = true;
  std::optional<Form> residual;  // a non-vanishing boundary expression
};

struct BcVerdict {
  bool holds = true;
  std::vector<ComponentVerdict> components;
};

ComponentVerdict check_bc_component(const DarbouxFrame& frame, BcKind kind, const Form& f,
                                    const BoundaryComponent& comp);
BcVerdict evaluate_bc(BcKind kind, const Form& f, const ManifoldDescriptor& manifold);
bool check_bc(BcKind kind, const Form& f, const ManifoldDescriptor& manifold);

// beta = w1^beta1 + w2^beta2 + Theta12^beta3 + beta4 with w1 = d(rho) and
// Theta12 = w1^w2 - c * omega', omega' the symplectic form of the other pairs.
struct LocalFrame {
  int w1 = 0, w2 = 0;    // coframe indices
  int s1 = 1, s2 = 1;    // w1 = s1 * dvar(w1), w2 = s2 * dvar(w2)
  std::vector<std::pair<int, int>> rest;  // remaining Darboux pairs
};

struct LocalDecomposition {
  LocalFrame local;
  Form beta1, beta2, beta3, beta4;
  Scalar theta_c;  // c solved from primitivity of Theta12 ^ beta3

  Form theta12(int n) const;
  Form reconstruct() const;
};

// Only for components with constant d(rho) equal to a signed coframe element.
LocalFrame local_frame(const DarbouxFrame& frame, const BoundaryComponent& comp);
LocalDecomposition local_decompose(const DarbouxFrame& frame, const Form& beta,
                                   const BoundaryComponent& comp);

// Primed operators on the complement of w1, w2, for forms free of w1 and w2.
struct PrimedOps {
  const DarbouxFrame& frame;
  LocalFrame local;

  Form e_derivative(int which, const Form& f) const;  // which = 1 or 2
  Form d(const Form& f) const;
  Form d_star(const Form& f) const;
  Form L(const Form& f) const;
  Form Lambda(const Form& f) const;
  Form del_plus(const Form& f) const;
  Form del_minus(const Form& f) const;
  Form del_plus_star(const Form& f) const;
  Form del_minus_star(const Form& f) const;
};

struct CrosscheckResult {
  bool applicable = true;  // false for second-order rows below degree n
  bool table_holds = true;
  bool check_holds = true;
  bool agree() const { return !applicable || table_holds == check_holds; }
};

// Evaluates the local-form constraint for `kind` on the decomposition and
// compares it with check_bc_component. Second-order rows are stated for degree n.
CrosscheckResult local_form_crosscheck(const DarbouxFrame& frame, const Form& beta, BcKind kind,
                                   const BoundaryComponent& comp);

}  // namespace symbc
