#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbc/boundary.hpp"
#include "symbc/cohomology.hpp"

namespace symbc {

// plus/minus switch to the second-order field equations in degree n;
// plusplus/minusminus name those degree-n spaces explicitly. deRham is
// d = d* = 0 without primitivity.
enum class FieldSpace { plus, minus, plusplus, minusminus, deRham };

std::string to_string(FieldSpace s);
std::optional<FieldSpace> field_space_from_string(const std::string& s);
std::vector<OperatorKind> field_equations(FieldSpace space, int k, int n);

struct CheckRecord {
  std::string name;
  bool passed = true;
  std::string witness;    // set on failure
  bool advisory = false;  // reported but excluded from the verdict
};

using CheckList = std::vector<CheckRecord>;
bool all_passed(const CheckList& checks);
void append(CheckList& into, const CheckList& more);

struct HarmonicFieldClaim {
  Form form;
  FieldSpace space = FieldSpace::plus;
  BcKind bc = BcKind::N;
};

// Records named label.primitive, label.<operator> and label.<bc>.
CheckList verify_harmonic_field(const ManifoldDescriptor& m, const HarmonicFieldClaim& claim,
                                const std::string& label);

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Descriptor JSON: {name?, n, factors: [{kind, coords}], omega_pairs (1-based
// coframe indices), jsign}.
ManifoldDescriptor manifold_from_json(const std::string& text);
ManifoldDescriptor load_manifold(const std::filesystem::path& file);

enum class FormVariant { printed, corrected };

struct ClaimedForm {
  std::string printed;
  std::string corrected;  // empty when the printed form stands
  std::string note;

  const std::string& text(FormVariant v) const;
};

struct ClaimedBasis {
  std::string family;  // one of the dimension rows, e.g. ph_plus_rel
  int degree = 0;
  FieldSpace space = FieldSpace::plus;
  BcKind bc = BcKind::N;
  std::vector<BcKind> also_report;  // evaluated as advisory checks
  std::vector<ClaimedForm> forms;
};

struct FixtureSet {
  std::string name;
  std::string description;
  ManifoldDescriptor manifold;
  std::map<std::string, std::vector<int>> expected;
  std::vector<ClaimedBasis> bases;

  const ClaimedBasis* find(const std::string& family, int degree) const;
  std::vector<Form> forms(const std::string& family, int degree, FormVariant v) const;
};

const std::vector<std::string>& dimension_rows();
std::vector<int> table_row(const CohomologyTable& t, const std::string& row);

// Reads data_dir/fixtures/<name>.json and the manifold it names from
// data_dir/manifolds/.
FixtureSet load_fixture(const std::filesystem::path& data_dir, const std::string& name);
std::vector<std::string> list_fixtures(const std::filesystem::path& data_dir);

// Testing hook: shifts one expected dimension.
void perturb_dimension(FixtureSet& fs, const std::string& row, int k, int delta);

// Column rank of the coefficient vectors, monomials treated as generators.
int constant_rank(const std::vector<Form>& forms);

CheckList verify_fixture(const FixtureSet& fs, FormVariant variant = FormVariant::printed);

struct PairingResult {
  std::string label;
  PiMatrix matrix;
  int rank = 0;
  bool nondegenerate = false;  // square and full rank
};

std::vector<PairingResult> pairings(const FixtureSet& fs, int k, FormVariant variant = FormVariant::printed);
std::string matrix_text(const PiMatrix& m);

// Square and full rank over Q(pi) for PH+ x PH-(rel) and PH- x PH+(rel) in
// degree k, where both bases are present.
CheckList pairing_check(const FixtureSet& fs, int k, FormVariant variant = FormVariant::printed);

}  // namespace symbc
