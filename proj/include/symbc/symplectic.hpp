#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symbc/form.hpp"
#include "symbc/frame.hpp"

namespace symbc {

struct LefschetzDecomposition {
  int n = 0;
  int degree = 0;
  std::map<int, Form> components;  // r -> primitive beta_{k-2r}

  Form reconstruct(const DarbouxFrame& frame) const;
};

// One summand omega^r ^ beta_s of a form, already multiplied out.
struct LefschetzComponent {
  int r = 0;
  int s = 0;
  Form value;
};

Form lefschetz_L(const DarbouxFrame& frame, const Form& f);
Form dual_Lambda(const DarbouxFrame& frame, const Form& f);
Form degree_H(const Form& f);
Form weight_R(const DarbouxFrame& frame, const Form& f);

LefschetzDecomposition lefschetz_decompose(const DarbouxFrame& frame, const Form& f);
std::vector<LefschetzComponent> lefschetz_components(const DarbouxFrame& frame, const Form& f);
bool is_primitive(const DarbouxFrame& frame, const Form& f);

// Multiplies each component omega^r ^ beta_s (degree k) by factor(r, s, k).
Form scale_components(const DarbouxFrame& frame, const Form& f,
                      const std::function<Scalar(int r, int s, int k)>& factor);

Form project_Pi(const DarbouxFrame& frame, const Form& f);
Form star_r(const DarbouxFrame& frame, const Form& beta);

Form conj_J(const DarbouxFrame& frame, const Form& f);
Form conj_J_inverse(const DarbouxFrame& frame, const Form& f);

Form d_Lambda(const DarbouxFrame& frame, const Form& f);
Form del_plus(const DarbouxFrame& frame, const Form& f);
Form del_minus(const DarbouxFrame& frame, const Form& f);

Form d_star(const DarbouxFrame& frame, const Form& f);
Form d_Lambda_star(const DarbouxFrame& frame, const Form& f);
Form del_plus_star(const DarbouxFrame& frame, const Form& f);
Form del_minus_star(const DarbouxFrame& frame, const Form& f);

enum class OperatorKind {
  d,
  dLambda,
  delPlus,
  delMinus,
  dStar,
  dLambdaStar,
  delPlusStar,
  delMinusStar,
  delPlusDelMinus,
  delPlusDelMinusStar,
};

std::string to_string(OperatorKind kind);
int degree_shift(OperatorKind kind);
int operator_order(OperatorKind kind);
bool is_starred(OperatorKind kind);
OperatorKind adjoint_kind(OperatorKind kind);

Form apply_operator(const DarbouxFrame& frame, OperatorKind kind, const Form& f);
// kind must be a starred kind.
Form adjoint(const DarbouxFrame& frame, OperatorKind kind, const Form& f);

enum class LaplacianKind { plus, minus, plusplus, minusminus };
Form laplacian(const DarbouxFrame& frame, LaplacianKind which, const Form& f);

}  // namespace symbc
