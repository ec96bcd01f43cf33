#pragma once

#include <map>
#include <string>
#include <vector>

#include "symbc/boundary.hpp"
#include "symbc/linalg.hpp"

namespace symbc {

// Constant-coefficient representatives of H^k(M), k = 0..2n.
struct GradedBasis {
  int n = 0;
  std::vector<std::vector<Form>> degrees;

  std::vector<int> dims() const;
};

struct KunnethResult {
  GradedBasis absolute;
  std::vector<int> relative_dims;  // dim H^k(M, dM) = dim H^{2n-k}(M)
};

KunnethResult kunneth_cohomology(const ManifoldDescriptor& m);

struct ExactnessCertificate {
  Form term;       // dropped summand of omega
  Form potential;  // term == d(potential)
};

struct OmegaReduction {
  Form omega_const;
  std::vector<ExactnessCertificate> certificates;
};

// Drops every summand of omega that involves a non-periodic differential,
// recording a potential for each. Throws if a certificate fails to verify.
OmegaReduction omega_const(const ManifoldDescriptor& m, const Form& omega);

// matrices[k] is L: H^k -> H^{k+2} in the basis (rows index degree k+2).
struct LefschetzMatrixSet {
  std::vector<Matrix> matrices;
};

LefschetzMatrixSet lefschetz_matrices(const GradedBasis& basis, const Form& omega_c);

struct PhDims {
  std::vector<int> plus;   // k = 0..n
  std::vector<int> minus;  // k = 0..n
};

PhDims ph_dims_absolute(const LefschetzMatrixSet& mats, const std::vector<int>& dims);

// Relative ker/coker through the duality rank L_rel(j) = rank L(2n-j-2).
PhDims ph_dims_relative(const LefschetzMatrixSet& mats, const std::vector<int>& dims);

struct CohomologyTable {
  std::vector<int> de_rham_abs, de_rham_rel;
  std::vector<int> ph_plus_abs, ph_minus_abs, ph_plus_rel, ph_minus_rel;
  bool routes_agree = true;  // relative dims via the two routes
};

CohomologyTable cohomology_table(const ManifoldDescriptor& m);

struct IndexPair {
  int absolute = 0;
  int relative = 0;
};

IndexPair euler_index(const CohomologyTable& table);

// Exact value sum_p c_p * pi^p.
class PiValue {
 public:
  PiValue() = default;
  PiValue(const Scalar& c, int pi_power = 0);

  const std::map<int, Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int max_power() const;
  Scalar evaluate_at(const Scalar& t) const;  // substitutes t for pi

  PiValue& operator+=(const PiValue& o);
  PiValue& operator*=(const PiValue& o);
  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
  friend bool operator==(const PiValue& a, const PiValue& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::map<int, Scalar> coeffs_;
};

PiValue integrate_top(const ManifoldDescriptor& m, const Form& f);

using PiMatrix = std::vector<std::vector<PiValue>>;

// Entry (i, j) = (-1)^{k(k+1)/2} * integral of omega^{n-k}/(n-k)! ^ beta_i ^ lambda_j.
PiMatrix pairing_matrix(const ManifoldDescriptor& m, int k, const std::vector<Form>& plus_basis,
                        const std::vector<Form>& minus_rel_basis);

// Rank over Q(pi), treating pi as transcendental.
int pi_rank(const PiMatrix& mat);

}  // namespace symbc
