#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "symbc/cohomology.hpp"
#include "test_manifolds.hpp"

using namespace symbc;
using oracle::parse;
using namespace testing_manifolds;

TEST_CASE("Kunneth dimensions") {
  auto ixt = kunneth_cohomology(interval_torus());
  CHECK(ixt.absolute.dims() == std::vector<int>{1, 5, 10, 10, 5, 1, 0});
  CHECK(ixt.relative_dims == std::vector<int>{0, 1, 5, 10, 10, 5, 1});
  auto b = kunneth_cohomology(ball_torus());
  CHECK(b.absolute.dims() == std::vector<int>{1, 3, 3, 1, 0, 0, 0});
  CHECK(b.absolute.degrees[1][0] == parse(3, "dy1"));
  for (const auto& deg : ixt.absolute.degrees)
    for (const auto& rep : deg) CHECK(exterior_d(rep).is_zero());
}

TEST_CASE("omega reduction with certificates") {
  auto ixt = interval_torus();
  auto r = omega_const(ixt, ixt.frame().omega());
  CHECK(r.omega_const == parse(3, "dx2^dy2 + dx3^dy3"));
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].potential == parse(3, "x1*dy1"));

  auto b = ball_torus();
  auto rb = omega_const(b, b.frame().omega());
  CHECK(rb.omega_const.is_zero());
  CHECK(rb.certificates.size() == 3);

  auto bt = ball_torus_tilde();
  auto rt = omega_const(bt, bt.frame().omega());
  CHECK(rt.omega_const == parse(3, "dy1^dy2"));
  REQUIRE(rt.certificates.size() == 2);
  for (const auto& c : rt.certificates) CHECK(exterior_d(c.potential) == c.term);
  CHECK(rt.certificates[0].potential == parse(3, "x1*dx2"));
  CHECK(rt.certificates[1].potential == parse(3, "-x3*dy3"));
}

TEST_CASE("Lefschetz matrices") {
  auto ixt = interval_torus();
  auto kun = kunneth_cohomology(ixt);
  auto mats = lefschetz_matrices(kun.absolute, omega_const(ixt, ixt.frame().omega()).omega_const);
  CHECK_FALSE(mats.matrices[0].is_zero());
  CHECK(mats.matrices[0].rank() == 1);

  auto b = ball_torus();
  auto mb = lefschetz_matrices(kunneth_cohomology(b).absolute, omega_const(b, b.frame().omega()).omega_const);
  for (const auto& m : mb.matrices) CHECK(m.is_zero());

  auto bt = ball_torus_tilde();
  auto kb = kunneth_cohomology(bt);
  auto mt = lefschetz_matrices(kb.absolute, omega_const(bt, bt.frame().omega()).omega_const);
  // dy3 -> dy1^dy2^dy3; dy1, dy2 -> 0
  const Matrix& m1 = mt.matrices[1];
  REQUIRE(m1.rows() == 1);
  REQUIRE(kb.absolute.degrees[1][2] == parse(3, "dy3"));
  CHECK(m1.at(0, 0).is_zero());
  CHECK(m1.at(0, 1).is_zero());
  CHECK(m1.at(0, 2) == Scalar(1));
}

TEST_CASE("primitive cohomology dimensions") {
  auto t = cohomology_table(interval_torus());
  CHECK(t.ph_plus_abs == std::vector<int>{1, 5, 9, 10});
  CHECK(t.ph_minus_abs == std::vector<int>{0, 1, 5, 9});
  CHECK(t.ph_minus_rel == std::vector<int>{1, 5, 9, 10});
  CHECK(t.ph_plus_rel == std::vector<int>{0, 1, 5, 9});
  CHECK(t.routes_agree);

  auto b = cohomology_table(ball_torus());
  CHECK(b.ph_plus_abs == std::vector<int>{1, 4, 6, 4});
  CHECK(b.ph_minus_abs == std::vector<int>{0, 0, 0, 1});
  CHECK(b.routes_agree);

  auto bt = cohomology_table(ball_torus_tilde());
  CHECK(bt.ph_plus_abs == std::vector<int>{1, 3, 4, 3});
  CHECK(bt.ph_minus_rel == std::vector<int>{1, 3, 4, 3});
  CHECK(bt.routes_agree);

  for (const auto* table : {&t, &b, &bt}) {
    auto idx = euler_index(*table);
    CHECK(idx.absolute == 0);
    CHECK(idx.relative == 0);
  }
}

TEST_CASE("random Darboux pairings keep the cohomology identities") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 2;
    std::vector<int> coords(2 * n);
    for (int i = 0; i < 2 * n; ++i) coords[i] = i;
    std::shuffle(coords.begin(), coords.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(coords[2 * i], coords[2 * i + 1]);
    std::vector<int> torus;
    for (int v = 1; v < 2 * n; ++v) torus.push_back(v);
    ManifoldDescriptor m("I x T", {{FactorKind::Interval, {0}}, {FactorKind::TorusCoord, torus}},
                         DarbouxFrame(n, pairs));
    auto kun = kunneth_cohomology(m);
    auto red = omega_const(m, m.frame().omega());
    Form dropped(n, 2);
    for (const auto& c : red.certificates) {
      CHECK(exterior_d(c.potential) == c.term);
      dropped += c.term;
    }
    CHECK(dropped + red.omega_const == m.frame().omega());
    auto mats = lefschetz_matrices(kun.absolute, red.omega_const);
    auto dims = kun.absolute.dims();
    for (int j = 0; j + 2 <= 2 * n; ++j) {
      int r = mats.matrices[j].rank();
      CHECK((dims[j + 2] - r) - (dims[j] - r) == dims[j + 2] - dims[j]);
    }
    auto t = cohomology_table(m);
    CHECK(t.routes_agree);
    CHECK(euler_index(t).absolute == 0);
    CHECK(euler_index(t).relative == 0);
  }
}

TEST_CASE("top-degree integrals") {
  auto ixt = interval_torus();
  Form vol = parse(3, "dx1^dy1^dx2^dy2^dx3^dy3");
  CHECK(integrate_top(ixt, vol) == PiValue(Scalar(1)));
  CHECK(integrate_top(ixt, vol.times(Poly::variable(0) * Poly::variable(0))) == PiValue(Scalar(1, 3)));
  CHECK_THROWS(integrate_top(ixt, parse(3, "dx1")));

  auto b = ball_torus();
  CHECK(integrate_top(b, vol) == PiValue(Scalar(4, 3), 1));
  // Spherical-shell values: int_B x^2 = 4pi/15, int_B x^2 y^2 = 4pi/105.
  CHECK(integrate_top(b, vol.times(Poly::variable(0) * Poly::variable(0))) == PiValue(Scalar(4, 15), 1));
  Poly x2y2 = Poly::variable(0) * Poly::variable(0) * Poly::variable(2) * Poly::variable(2);
  CHECK(integrate_top(b, vol.times(x2y2)) == PiValue(Scalar(4, 105), 1));
  CHECK(integrate_top(b, vol.times(Poly::variable(4))).is_zero());
  CHECK(integrate_top(b, vol).to_string() == "4/3*pi");
}

TEST_CASE("pairing matrices and rank over Q(pi)") {
  auto ixt = interval_torus();
  auto m0 = pairing_matrix(ixt, 0, {parse(3, "1")}, {parse(3, "1")});
  REQUIRE(m0.size() == 1);
  CHECK((m0[0][0] == PiValue(Scalar(1)) || m0[0][0] == PiValue(Scalar(-1))));

  std::vector<Form> plus = {parse(3, "dx2"), parse(3, "dx3"), parse(3, "dy1"), parse(3, "dy2"), parse(3, "dy3")};
  std::vector<Form> minus = {parse(3, "dx1"), parse(3, "dx2"), parse(3, "dx3"), parse(3, "dy2"), parse(3, "dy3")};
  auto m1 = pairing_matrix(ixt, 1, plus, minus);
  CHECK(pi_rank(m1) == 5);
  minus[0] = Form(3, 1);
  CHECK(pi_rank(pairing_matrix(ixt, 1, plus, minus)) == 4);

  PiValue pi(Scalar(1), 1), one(Scalar(1));
  CHECK(pi_rank({{pi, one}, {pi * pi, pi}}) == 1);
  CHECK(pi_rank({{pi, one}, {one, pi}}) == 2);  // singular at pi = 1 only
}
