#include "symbc/identities.hpp"

#include <map>

#include "symbc/exterior.hpp"
#include "symbc/random_forms.hpp"
#include "symbc/symplectic.hpp"

namespace symbc {

namespace {

class Recorder {
 public:
  void record(const std::string& name, bool ok, const Form& input) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, results_.size()).first;
      results_.push_back({name, 0, 0, std::nullopt});
    }
    IdentityResult& r = results_[it->second];
    ++r.checked;
    if (!ok) {
      ++r.failed;
      if (!r.witness) r.witness = input.to_string();
    }
  }
  std::vector<IdentityResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<IdentityResult> results_;
};

Scalar factorial(int m) {
  Scalar out(1);
  for (int i = 2; i <= m; ++i) out *= Scalar(i);
  return out;
}

// (H + R + shift) on each Lefschetz component.
Form h_plus_r(const DarbouxFrame& frame, const Form& f, int shift) {
  int n = f.n();
  return scale_components(frame, f, [n, shift](int r, int, int k) { return Scalar(n - k + r + shift); });
}

void check_general(const DarbouxFrame& frame, const Form& f, Recorder& rec) {
  int n = f.n(), k = f.degree();
  Form dp = del_plus(frame, f);
  Form dm = del_minus(frame, f);
  Form df = exterior_d(f);
  auto L = [&](const Form& g) { return lefschetz_L(frame, g); };
  auto Lam = [&](const Form& g) { return dual_Lambda(frame, g); };
  auto J = [&](const Form& g) { return conj_J(frame, g); };
  auto Jinv = [&](const Form& g) { return conj_J_inverse(frame, g); };

  rec.record("del_plus_squared_vanishes", del_plus(frame, dp).is_zero(), f);
  rec.record("del_minus_squared_vanishes", del_minus(frame, dm).is_zero(), f);
  rec.record("d_equals_del_plus_plus_L_del_minus", df == dp + L(dm), f);
  rec.record("L_del_plus_del_minus_anticommutes",
             L(del_plus(frame, dm)) == -L(del_minus(frame, dp)), f);
  rec.record("L_commutes_with_del_plus", L(dp) == del_plus(frame, L(f)), f);
  rec.record("L_commutes_with_L_del_minus", L(L(dm)) == L(del_minus(frame, L(f))), f);

  rec.record("sl2_Lambda_L_equals_H", Lam(L(f)) - L(Lam(f)) == degree_H(f), f);
  rec.record("sl2_H_Lambda_equals_2Lambda", degree_H(Lam(f)) - Lam(degree_H(f)) == Lam(f) * Scalar(2), f);
  rec.record("sl2_H_L_equals_minus_2L", degree_H(L(f)) - L(degree_H(f)) == L(f) * Scalar(-2), f);

  Form jf = J(f);
  rec.record("J_squared_is_sign", J(jf) == (k % 2 ? -f : f), f);
  rec.record("J_real_and_commutes_with_L_Lambda",
             jf.is_real() == f.is_real() && J(L(f)) == L(jf) && J(Lam(f)) == Lam(jf), f);

  Form dl = d_Lambda(frame, f);
  rec.record("dLambda_equals_Jinv_dstar_J", dl == Jinv(d_star(frame, jf)), f);
  rec.record("dLambda_star_equals_Jinv_d_J",
             d_Lambda_star(frame, f) == Jinv(exterior_d(jf)) &&
                 d_Lambda_star(frame, f) == L(d_star(frame, f)) - d_star(frame, L(f)),
             f);
  rec.record("dLambda_squared_vanishes", d_Lambda(frame, dl).is_zero(), f);

  rec.record("J_del_plus_Jinv_equals_del_minus_star_HR",
             J(del_plus(frame, Jinv(f))) == del_minus_star(frame, h_plus_r(frame, f, 0)), f);
  rec.record("J_del_plus_star_Jinv_equals_HR_del_minus",
             J(del_plus_star(frame, Jinv(f))) == h_plus_r(frame, dm, 0), f);

  // Closed forms of del_plus and del_minus in terms of d and dLambda.
  {
    Form bracket = h_plus_r(frame, df, 1) + L(dl);
    Form closed = scale_components(frame, bracket, [n](int r, int, int kk) { return Scalar(1, n - kk + 2 * r + 1); });
    rec.record("closed_form_del_plus_matches_algorithm", closed == dp, f);
  }
  {
    Form bracket = Lam(df) - h_plus_r(frame, dl, 0);
    bool ok = true;
    Form closed(n, k - 1);
    for (const auto& c : lefschetz_components(frame, bracket)) {
      int hr = n - c.value.degree() + c.r;
      if (hr == 0) {
        ok = false;
        continue;
      }
      closed += c.value * Scalar(1, (n - c.value.degree() + 2 * c.r + 1) * hr);
    }
    rec.record("closed_form_del_minus_matches_algorithm", ok && closed == dm, f);
  }

  auto dec = lefschetz_decompose(frame, f);
  bool dec_ok = dec.reconstruct(frame) == f;
  for (const auto& [r, beta] : dec.components) dec_ok = dec_ok && is_primitive(frame, beta);
  if (k <= n) dec_ok = dec_ok && project_Pi(frame, project_Pi(frame, f)) == project_Pi(frame, f);
  rec.record("lefschetz_decomposition_round_trip", dec_ok, f);
}

void check_primitive(const DarbouxFrame& frame, const Form& beta, Recorder& rec) {
  int n = beta.n(), k = beta.degree();
  Form ds = d_star(frame, beta);
  rec.record("del_plus_star_equals_d_star_on_primitives", del_plus_star(frame, beta) == ds, beta);
  if (k < n) {
    Form expected = d_star(frame, lefschetz_L(frame, beta)) * Scalar(1, n - k) -
                    lefschetz_L(frame, ds) * Scalar(1, n - k + 1);
    rec.record("del_minus_star_primitive_formula", del_minus_star(frame, beta) == expected, beta);
  } else {
    rec.record("del_minus_star_vanishes_in_middle_degree", del_minus_star(frame, beta).is_zero(), beta);
  }

  Form db = exterior_d(beta);
  if (k < n) {
    bool ok = del_plus(frame, beta) == project_Pi(frame, db);
    Form lam_d = dual_Lambda(frame, db) * Scalar(1, n - k + 1);
    ok = ok && del_minus(frame, beta) == lam_d;
    ok = ok && del_minus(frame, beta) == d_Lambda(frame, beta) * Scalar(-1, n - k + 1);
    rec.record("primitive_del_formulas", ok, beta);
  }

  Form rhs = wedge(frame.omega_power(n - k), conj_J(frame, beta)) * factorial(n - k).inverse();
  if ((k * (k + 1) / 2) % 2) rhs = -rhs;
  rec.record("hodge_star_primitive_formula", hodge_star(frame, beta) == rhs, beta);
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(int n, int cases, std::uint64_t seed) {
  DarbouxFrame frame = DarbouxFrame::standard(n);
  FormGenerator gen(seed);
  auto vars = FormGenerator::all_vars(n);
  Recorder rec;
  for (int c = 0; c < cases; ++c) {
    Form f = gen.random_form(n, gen.uniform(0, 2 * n), vars);
    check_general(frame, f, rec);
    Form beta = gen.random_primitive(frame, gen.uniform(0, n), vars);
    check_primitive(frame, beta, rec);
  }
  return rec.take();
}

}  // namespace symbc
