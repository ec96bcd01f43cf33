#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "symbc/fixtures.hpp"

using namespace symbc;
using oracle::parse;

namespace {

const std::filesystem::path kData = SYMBC_DATA_DIR;

std::set<std::string> failing(const CheckList& checks) {
  std::set<std::string> out;
  for (const auto& c : checks)
    if (!c.passed && !c.advisory) out.insert(c.name);
  return out;
}

bool has_check(const CheckList& checks, const std::string& suffix, bool passed) {
  return std::any_of(checks.begin(), checks.end(), [&](const CheckRecord& c) {
    return c.name.size() >= suffix.size() && c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0 &&
           c.passed == passed;
  });
}

}  // namespace

TEST_CASE("manifold descriptors load from JSON") {
  auto m = load_manifold(kData / "manifolds" / "B3xT3_tilde.json");
  CHECK(m.n() == 3);
  CHECK(m.frame().pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {5, 4}});
  CHECK(m.periodic_vars() == std::vector<int>{1, 3, 5});
  CHECK(m.boundary().size() == 1);

  auto i = load_manifold(kData / "manifolds" / "IxT5.json");
  CHECK(i.boundary().size() == 2);

  CHECK_THROWS_AS(manifold_from_json("{"), DataError);
  CHECK_THROWS_AS(manifold_from_json(R"({"n": 1, "factors": [{"kind": "disk", "coords": ["x1"]}], "omega_pairs": [[1,2]]})"),
                  DataError);
  CHECK_THROWS_AS(manifold_from_json(R"({"n": 1, "factors": [{"kind": "torus", "coords": ["x1"]}], "omega_pairs": [[1,2]]})"),
                  DataError);  // y1 uncovered
  CHECK_THROWS_AS(manifold_from_json(R"({"n": 1, "factors": [{"kind": "torus", "coords": ["x1", "y2"]}], "omega_pairs": [[1,2]]})"),
                  DataError);
}

TEST_CASE("field equations per space") {
  using O = OperatorKind;
  CHECK(field_equations(FieldSpace::plus, 1, 3) == std::vector<O>{O::delPlus, O::delPlusStar});
  CHECK(field_equations(FieldSpace::plus, 3, 3) == std::vector<O>{O::delPlusDelMinus, O::delPlusStar});
  CHECK(field_equations(FieldSpace::minus, 3, 3) == std::vector<O>{O::delMinus, O::delPlusDelMinusStar});
  CHECK(field_equations(FieldSpace::deRham, 2, 3) == std::vector<O>{O::d, O::dStar});
  CHECK(field_space_from_string("minusminus") == FieldSpace::minusminus);
  CHECK_FALSE(field_space_from_string("zero").has_value());
}

TEST_CASE("harmonic field claims") {
  auto m = load_manifold(kData / "manifolds" / "IxT5.json");
  auto ok = verify_harmonic_field(m, {parse(3, "x1*dy1^(dx2^dy2 - dx3^dy3)"), FieldSpace::plus, BcKind::Nplus}, "a");
  CHECK(all_passed(ok));
  CHECK(ok.size() == 4);

  // d+(rho dy1) restricts to Pi(dx1^dy1) at x1 = 0.
  auto probe = verify_harmonic_field(m, {parse(3, "dy1"), FieldSpace::plus, BcKind::Dplus}, "b");
  CHECK(failing(probe) == std::set<std::string>{"b.Dplus"});
  CHECK(has_check(probe, "b.delPlus", true));

  auto nonprim = verify_harmonic_field(
      m, {parse(3, "dx1^dy1 - 1/2*(dx2^dy2 - dx3^dy3)"), FieldSpace::minus, BcKind::Dminus}, "c");
  CHECK(failing(nonprim).count("c.primitive") == 1);
  Form fixed = parse(3, "dx1^dy1 - 1/2*(dx2^dy2 + dx3^dy3)");
  CHECK(all_passed(verify_harmonic_field(m, {fixed, FieldSpace::plus, BcKind::Dplus}, "d")));
  CHECK(all_passed(verify_harmonic_field(m, {fixed, FieldSpace::minus, BcKind::Nminus}, "d")));

  auto periodic = verify_harmonic_field(m, {parse(3, "y1*dx1"), FieldSpace::plus, BcKind::D}, "e");
  CHECK(failing(periodic) == std::set<std::string>{"e.periodic"});
}

TEST_CASE("constant rank treats monomials as generators") {
  CHECK(constant_rank({parse(3, "x1*dy1"), parse(3, "dy1")}) == 2);
  CHECK(constant_rank({parse(3, "dy1 + dy2"), parse(3, "2*dy1 + 2*dy2")}) == 1);
  CHECK(constant_rank({parse(3, "x1*dy1 + dx2"), parse(3, "x1*dy1"), parse(3, "dx2")}) == 2);
  CHECK(constant_rank({}) == 0);
}

TEST_CASE("fixture files") {
  CHECK(list_fixtures(kData) == std::vector<std::string>{"B3xT3", "B3xT3_tilde", "IxT5"});
  CHECK_THROWS_AS(load_fixture(kData, "S2"), DataError);
  auto fs = load_fixture(kData, "IxT5");
  CHECK(fs.expected.at("ph_plus_abs") == std::vector<int>{1, 5, 9, 10});
  REQUIRE(fs.find("ph_minus_rel", 2) != nullptr);
  CHECK(fs.find("ph_minus_rel", 2)->forms.size() == 9);
  CHECK(fs.find("ph_minus_abs", 0) == nullptr);
}

TEST_CASE("corrected fixtures verify completely") {
  for (const auto& name : list_fixtures(kData)) {
    CAPTURE(name);
    auto fs = load_fixture(kData, name);
    auto checks = verify_fixture(fs, FormVariant::corrected);
    for (int k = 0; k <= fs.manifold.n(); ++k) append(checks, pairing_check(fs, k, FormVariant::corrected));
    CHECK(failing(checks).empty());
  }
}

TEST_CASE("printed fixtures fail exactly at the transcribed errata") {
  auto i = load_fixture(kData, "IxT5");
  auto fi = failing(verify_fixture(i, FormVariant::printed));
  for (const char* name : {"IxT5.ph_minus_abs.k2[4].primitive", "IxT5.ph_plus_rel.k2[4].primitive",
                           "IxT5.ph_minus_rel.k2[1].Dminus", "IxT5.ph_minus_rel.k2[3].Dminus"})
    CHECK(fi.count(name) == 1);
  for (const auto& f : fi) {
    CAPTURE(f);
    CHECK((f.find(".k2[") != std::string::npos || f.find(".k2.J[") != std::string::npos));
  }
  auto b = load_fixture(kData, "B3xT3");
  CHECK(failing(verify_fixture(b, FormVariant::printed)).empty());
  auto t = load_fixture(kData, "B3xT3_tilde");
  auto ft = failing(verify_fixture(t, FormVariant::printed));
  for (const auto& f : ft) CHECK(f.rfind("B3xT3_tilde.ph_minus_rel.", 0) == 0);
  CHECK(ft.count("B3xT3_tilde.ph_minus_rel.k3[0].delMinus") == 1);
}

TEST_CASE("minus label of the second structure is reported for both conditions") {
  auto t = load_fixture(kData, "B3xT3_tilde");
  auto checks = verify_fixture(t, FormVariant::corrected);
  CHECK(has_check(checks, "ph_minus_abs.k3[0].NminusMinus", true));
  auto it = std::find_if(checks.begin(), checks.end(),
                         [](const CheckRecord& c) { return c.name == "B3xT3_tilde.ph_minus_abs.k3[0].NplusMinus"; });
  REQUIRE(it != checks.end());
  CHECK(it->advisory);
}

TEST_CASE("perturbed dimension is named") {
  auto fs = load_fixture(kData, "B3xT3");
  perturb_dimension(fs, "ph_plus_abs", 1, 1);
  auto f = failing(verify_fixture(fs, FormVariant::corrected));
  CHECK(f == std::set<std::string>{"B3xT3.dims.ph_plus_abs", "B3xT3.ph_plus_abs.k1.count"});
  CHECK_THROWS(perturb_dimension(fs, "ph_plus_abs", 9, 1));
}

TEST_CASE("pairings") {
  auto fs = load_fixture(kData, "IxT5");
  auto p0 = pairing_check(fs, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].passed);
  auto p1 = pairing_check(fs, 1);
  REQUIRE(p1.size() == 2);
  CHECK(all_passed(p1));
  auto b = load_fixture(kData, "B3xT3");
  auto p3 = pairing_check(b, 3);
  CHECK(p3.size() == 2);
  CHECK(all_passed(p3));
}
