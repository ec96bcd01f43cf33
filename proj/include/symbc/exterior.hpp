#pragma once

#include <utility>
#include <vector>

#include "symbc/form.hpp"
#include "symbc/linalg.hpp"

namespace symbc {

class DarbouxFrame;

// Vector field with one Poly component per coordinate.
using VectorField = std::vector<Poly>;

Form wedge(const Form& f, const Form& g);
Form contract(int j, const Form& f);  // interior product with the dual of w_j
Form interior(const VectorField& X, const Form& f);
Form exterior_d(const Form& f);
Form partial(int var, const Form& f);  // differentiate every coefficient
Form lie_derivative(const VectorField& X, const Form& f);

// Orthonormal coframe, orientation omega^n/n!.
Form hodge_star(const DarbouxFrame& frame, const Form& f);

// Sum over pairs of iota_{b} iota_{a}; the metric-free dual of L.
Form pair_contraction(const std::vector<std::pair<int, int>>& pairs, const Form& f);

// T maps 1-forms: column j holds the image of w_j. Extended to an algebra
// homomorphism on all forms.
Form coframe_transform(const Matrix& T, const Form& f);

// Applies a constant matrix from Lambda^{deg f} coordinates to
// Lambda^{target_degree} coordinates, coefficientwise.
Form apply_constant_map(const Matrix& M, const Form& f, int target_degree);

// True iff every coefficient is divisible by rho.
bool vanishes_mod(const Form& f, const Poly& rho);

}  // namespace symbc
