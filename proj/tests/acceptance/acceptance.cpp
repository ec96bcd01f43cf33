// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--data DIR] [--expect-fail 3,6]
//
// Exit status is 0 when the set of failing criteria equals the --expect-fail
// set (empty by default), so a documented, genuinely unattainable criterion
// still prints FAIL without hiding any other regression.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bc_samples.hpp"
#include "symbc/fixtures.hpp"
#include "symbc/identities.hpp"
#include "symbc/parse.hpp"
#include "test_manifolds.hpp"

using namespace symbc;

namespace {

// Pinned parameters.
constexpr int kIdentityCases = 600;
constexpr int kMinChecksPerIdentity = 100;
constexpr std::uint64_t kIdentitySeed = 20240611;
constexpr double kIdentityBudgetSeconds = 120.0;
constexpr std::size_t kMinCorpus = 50;
constexpr std::size_t kMinNegativeControls = 5;
constexpr std::size_t kMinRandomPrimitives = 50;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool holds(BcKind kind, const Form& f, const DarbouxFrame& frame, const BoundaryComponent& comp) {
  return check_bc_component(frame, kind, f, comp).holds;
}

struct Env {
  std::filesystem::path data;
  std::vector<FixtureSet> fixtures;  // IxT5, B3xT3, B3xT3_tilde

  const FixtureSet& get(const std::string& name) const {
    for (const auto& f : fixtures)
      if (f.name == name) return f;
    throw std::invalid_argument("no fixture " + name);
  }
};

Outcome criterion_identities() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int identities = 0, failures = 0, min_checked = 1 << 30;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& r : run_identity_suite(n, kIdentityCases, kIdentitySeed)) {
      ++identities;
      min_checked = std::min(min_checked, r.checked);
      if (r.failed) {
        ++failures;
        o.notes.push_back("n=" + std::to_string(n) + " " + r.name + " failed " + std::to_string(r.failed) +
                          ", witness " + r.witness.value_or("?"));
      }
      if (r.checked < kMinChecksPerIdentity)
        o.notes.push_back("n=" + std::to_string(n) + " " + r.name + " checked only " + std::to_string(r.checked));
    }
  }
  double secs = seconds_since(t0);
  o.pass = failures == 0 && min_checked >= kMinChecksPerIdentity && secs < kIdentityBudgetSeconds;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  o.detail = std::to_string(identities) + " identity runs over n=1..3, min " + std::to_string(min_checked) +
             " checks each, " + std::to_string(failures) + " failing, " + buf + " s";
  return o;
}

Outcome criterion_dimensions(const Env& env) {
  struct Pinned {
    const char* fixture;
    std::vector<std::pair<std::string, std::vector<int>>> rows;
  };
  const std::vector<Pinned> pinned = {
      {"IxT5",
       {{"de_rham_abs", {1, 5, 10, 10, 5, 1, 0}},
        {"de_rham_rel", {0, 1, 5, 10, 10, 5, 1}},
        {"ph_plus_abs", {1, 5, 9, 10}},
        {"ph_minus_abs", {0, 1, 5, 9}},
        {"ph_plus_rel", {0, 1, 5, 9}},
        {"ph_minus_rel", {1, 5, 9, 10}}}},
      {"B3xT3",
       {{"de_rham_abs", {1, 3, 3, 1, 0, 0, 0}},
        {"de_rham_rel", {0, 0, 0, 1, 3, 3, 1}},
        {"ph_plus_abs", {1, 4, 6, 4}},
        {"ph_minus_abs", {0, 0, 0, 1}},
        {"ph_plus_rel", {0, 0, 0, 1}},
        {"ph_minus_rel", {1, 4, 6, 4}}}},
      {"B3xT3_tilde",
       {{"ph_plus_abs", {1, 3, 4, 3}},
        {"ph_minus_abs", {0, 0, 0, 1}},
        {"ph_plus_rel", {0, 0, 0, 1}},
        {"ph_minus_rel", {1, 3, 4, 3}}}},
  };
  Outcome o{true, "", {}};
  int compared = 0;
  for (const auto& p : pinned) {
    auto table = cohomology_table(env.get(p.fixture).manifold);
    for (const auto& [row, want] : p.rows) {
      ++compared;
      auto got = table_row(table, row);
      if (got != want) {
        o.pass = false;
        o.notes.push_back(std::string(p.fixture) + " " + row + " computed " + join(got) + ", expected " + join(want));
      }
    }
  }
  o.detail = std::to_string(compared) + " rows compared exactly across 3 structures";
  return o;
}

bool is_form_claim(const CheckRecord& c) {
  return c.name.find(".dims.") == std::string::npos && c.name.find(".J[") == std::string::npos &&
         c.name.find(".J.rank") == std::string::npos && !c.advisory;
}

Outcome criterion_printed_bases(const Env& env) {
  Outcome o{true, "", {}};
  int forms = 0, bad_forms = 0, bases = 0, bad_bases = 0;
  for (const auto& fs : env.fixtures) {
    for (const auto& b : fs.bases) {
      ++bases;
      forms += static_cast<int>(b.forms.size());
    }
    std::set<std::string> failing_forms, failing_bases;
    for (const auto& c : verify_fixture(fs, FormVariant::printed)) {
      if (!is_form_claim(c) || c.passed) continue;
      auto bracket = c.name.find('[');
      if (bracket != std::string::npos) {
        failing_forms.insert(c.name.substr(0, c.name.find(']') + 1));
        o.notes.push_back("printed " + c.name + ": " + c.witness);
      } else {
        failing_bases.insert(c.name);
        o.notes.push_back("printed " + c.name + ": " + c.witness);
      }
    }
    bad_forms += static_cast<int>(failing_forms.size());
    bad_bases += static_cast<int>(failing_bases.size());
  }
  o.pass = bad_forms == 0 && bad_bases == 0;
  o.detail = std::to_string(forms - bad_forms) + "/" + std::to_string(forms) + " printed forms pass, " +
             std::to_string(bases - bad_bases) + "/" + std::to_string(bases) + " bases independent with claimed size";

  int corrected_fail = 0, corrected_total = 0;
  for (const auto& fs : env.fixtures)
    for (const auto& c : verify_fixture(fs, FormVariant::corrected))
      if (!c.advisory) {
        ++corrected_total;
        corrected_fail += !c.passed;
      }
  o.notes.push_back("with the transcribed corrections: " + std::to_string(corrected_total - corrected_fail) + "/" +
                    std::to_string(corrected_total) + " fixture checks pass (fields, conditions, J images, dims)");
  return o;
}

Outcome criterion_index(const Env& env) {
  Outcome o{true, "", {}};
  for (const auto& fs : env.fixtures) {
    auto idx = euler_index(cohomology_table(fs.manifold));
    o.detail += (o.detail.empty() ? "" : ", ") + fs.name + " (" + std::to_string(idx.absolute) + ", " +
                std::to_string(idx.relative) + ")";
    if (idx.absolute != 0 || idx.relative != 0) o.pass = false;
  }
  o.detail = "absolute/relative index: " + o.detail;
  return o;
}

Outcome criterion_routes(const Env& env) {
  Outcome o{true, "", {}};
  for (const auto& fs : env.fixtures) {
    auto t = cohomology_table(fs.manifold);
    // Lefschetz route vs duality with the absolute dims.
    bool agree = t.routes_agree && t.ph_plus_rel == t.ph_minus_abs && t.ph_minus_rel == t.ph_plus_abs;
    if (!agree) {
      o.pass = false;
      o.notes.push_back(fs.name + ": relative " + join(t.ph_plus_rel) + "/" + join(t.ph_minus_rel) + " vs dual " +
                        join(t.ph_minus_abs) + "/" + join(t.ph_plus_abs));
    }
  }
  o.detail = "relative PH dims from the Lefschetz maps equal the duality values for all 3 structures";
  return o;
}

Outcome criterion_pairing(const Env& env) {
  Outcome o{true, "", {}};
  const auto& fs = env.get("IxT5");
  auto run = [&](int k, FormVariant v, const char* tag) {
    for (const auto& r : pairings(fs, k, v)) {
      std::string line = std::string(tag) + " k=" + std::to_string(k) + " " +
                         r.label.substr(r.label.rfind('.') + 1) + " rank " + std::to_string(r.rank) + "/" +
                         std::to_string(r.matrix.size());
      if (!r.nondegenerate) o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + line;
    }
  };
  // k = 0, 1 use the printed bases. In degrees 2 and 3 the printed relative
  // minus basis is not a basis of harmonic fields (criterion 3), so the
  // nondegeneracy statement is tested on the corrected one.
  run(0, FormVariant::printed, "printed");
  run(1, FormVariant::printed, "printed");
  run(2, FormVariant::corrected, "corrected");
  run(3, FormVariant::corrected, "corrected");
  for (const auto& r : pairings(fs, 2, FormVariant::printed))
    if (!r.nondegenerate)
      o.notes.push_back("printed k=2 " + r.label.substr(r.label.rfind('.') + 1) + " has rank " +
                        std::to_string(r.rank) + "/" + std::to_string(r.matrix.size()));
  for (const char* other : {"B3xT3", "B3xT3_tilde"})
    for (const auto& r : pairings(env.get(other), 3, FormVariant::corrected))
      o.notes.push_back(r.label + " rank " + std::to_string(r.rank) + "/" + std::to_string(r.matrix.size()) +
                        (r.nondegenerate ? "" : " (degenerate)"));
  return o;
}

struct Sample {
  const DarbouxFrame* frame;
  const BoundaryComponent* comp;
  Form form;
};

Outcome criterion_bc_coherence(const Env& env) {
  using bc_samples::local_form_sample;
  using bc_samples::zero_pieces;
  Outcome o{true, "", {}};
  std::map<BcKind, std::vector<Sample>> corpus;
  FormGenerator gen(5150);

  auto add_fixture = [&](BcKind kind, const FixtureSet& fs, const std::string& family, int k) {
    for (const auto& f : fs.forms(family, k, FormVariant::corrected))
      for (const auto& comp : fs.manifold.boundary()) corpus[kind].push_back({&fs.manifold.frame(), &comp, f});
  };

  const auto& ixt = env.get("IxT5").manifold;
  const int n = 3;
  auto vars = FormGenerator::all_vars(n);
  for (const auto& comp : ixt.boundary()) {
    const auto* fr = &ixt.frame();
    for (int t = 0; t < 15; ++t) {
      int k = gen.uniform(0, n);
      Form rb = gen.random_primitive(*fr, k, vars).times(comp.rho);
      corpus[BcKind::Dplus].push_back({fr, &comp, rb});
      corpus[BcKind::Dminus].push_back({fr, &comp, rb});
      corpus[BcKind::Dplus].push_back({fr, &comp, local_form_sample(gen, *fr, comp, k, zero_pieces(BcKind::Dplus), vars)});
      corpus[BcKind::Dminus].push_back(
          {fr, &comp, local_form_sample(gen, *fr, comp, k, zero_pieces(BcKind::Dminus), vars)});
      corpus[BcKind::Nplus].push_back({fr, &comp, local_form_sample(gen, *fr, comp, k, zero_pieces(BcKind::Nplus), vars)});
      corpus[BcKind::Nminus].push_back(
          {fr, &comp, local_form_sample(gen, *fr, comp, k, zero_pieces(BcKind::Nminus), vars)});
      corpus[BcKind::DplusPlus].push_back(
          {fr, &comp, gen.random_primitive(*fr, n, vars).times(comp.rho * comp.rho)});
    }
  }
  for (const char* name : {"B3xT3", "B3xT3_tilde"}) {
    const auto& m = env.get(name).manifold;
    const auto& comp = m.boundary()[0];
    for (int t = 0; t < 10; ++t) {
      Form rb = gen.random_primitive(m.frame(), gen.uniform(0, n), {0, 2, 4}).times(comp.rho);
      corpus[BcKind::Dplus].push_back({&m.frame(), &comp, rb});
      corpus[BcKind::Dminus].push_back({&m.frame(), &comp, rb});
      corpus[BcKind::DplusPlus].push_back(
          {&m.frame(), &comp, gen.random_primitive(m.frame(), n, {0, 2, 4}).times(comp.rho * comp.rho)});
    }
  }
  for (const auto& fs : env.fixtures) {
    for (int k = 0; k <= n; ++k) {
      add_fixture(k == n ? BcKind::DplusPlus : BcKind::Dplus, fs, "ph_plus_rel", k);
      add_fixture(BcKind::Dminus, fs, "ph_minus_rel", k);
      add_fixture(BcKind::Nplus, fs, "ph_plus_abs", k);
      add_fixture(k == n ? BcKind::NminusMinus : BcKind::Nminus, fs, "ph_minus_abs", k);
    }
  }
  // J carries the Dirichlet corpora to Neumann-type ones.
  for (const auto& s : std::vector<Sample>(corpus[BcKind::Dminus]))
    corpus[BcKind::Nplus].push_back({s.frame, s.comp, conj_J(*s.frame, s.form)});
  for (const auto& s : std::vector<Sample>(corpus[BcKind::Dplus]))
    corpus[BcKind::Nminus].push_back({s.frame, s.comp, conj_J(*s.frame, s.form)});
  for (const auto& s : std::vector<Sample>(corpus[BcKind::DplusPlus]))
    corpus[BcKind::NminusMinus].push_back({s.frame, s.comp, conj_J(*s.frame, s.form)});

  int checks = 0, failures = 0;
  auto expect = [&](bool ok, const std::string& what, const Sample& s) {
    ++checks;
    if (!ok) {
      ++failures;
      if (o.notes.size() < 10) o.notes.push_back(what + " on " + s.form.to_string() + " at " + s.comp->name);
    }
  };

  std::string sizes;
  for (BcKind kind : {BcKind::Dplus, BcKind::Dminus, BcKind::DplusPlus, BcKind::Nplus, BcKind::Nminus}) {
    sizes += (sizes.empty() ? "" : " ") + to_string(kind) + ":" + std::to_string(corpus[kind].size());
    if (corpus[kind].size() < kMinCorpus) {
      o.pass = false;
      o.notes.push_back(to_string(kind) + " corpus has only " + std::to_string(corpus[kind].size()) + " forms");
    }
  }

  for (auto& [kind, samples] : corpus) {
    for (const auto& s : samples) {
      const auto& fr = *s.frame;
      const auto& c = *s.comp;
      const Form& b = s.form;
      int k = b.degree();
      expect(holds(kind, b, fr, c), "membership " + to_string(kind), s);
      if (kind == BcKind::Dplus) {
        expect(holds(BcKind::Dplus, del_plus(fr, b), fr, c), "d+ preserves D+", s);
        if (k == n - 1) expect(holds(BcKind::DplusPlus, del_plus(fr, b), fr, c), "d+ maps D+ into D++", s);
      }
      if (kind == BcKind::Dminus) expect(holds(BcKind::Dminus, del_minus(fr, b), fr, c), "d- preserves D-", s);
      if (kind == BcKind::Nplus) expect(holds(BcKind::Nplus, del_plus_star(fr, b), fr, c), "d+* preserves N+", s);
      if (kind == BcKind::Nminus) expect(holds(BcKind::Nminus, del_minus_star(fr, b), fr, c), "d-* preserves N-", s);
      if (kind == BcKind::DplusPlus)
        expect(holds(BcKind::Dminus, del_plus(fr, del_minus(fr, b)), fr, c), "d+d- maps D++ into D-", s);
    }
  }

  // J-equivalences on every tested form, plus random primitives that mostly
  // violate the conditions.
  std::vector<Sample> all;
  for (const auto& [kind, samples] : corpus) all.insert(all.end(), samples.begin(), samples.end());
  for (const auto& comp : ixt.boundary())
    for (int t = 0; t < 25; ++t) all.push_back({&ixt.frame(), &comp, gen.random_primitive(ixt.frame(), gen.uniform(0, n), vars)});
  for (const auto& s : all) {
    const auto& fr = *s.frame;
    const auto& c = *s.comp;
    Form jb = conj_J(fr, s.form);
    expect(holds(BcKind::Dplus, s.form, fr, c) == holds(BcKind::Nminus, jb, fr, c), "D+ iff J in N-", s);
    expect(holds(BcKind::Dminus, s.form, fr, c) == holds(BcKind::Nplus, jb, fr, c), "D- iff J in N+", s);
    expect(holds(BcKind::Nplus, s.form, fr, c) == holds(BcKind::N, s.form, fr, c), "N+ iff N", s);
    expect(holds(BcKind::Dminus, s.form, fr, c) == holds(BcKind::JN, s.form, fr, c), "D- iff JN", s);
    if (s.form.degree() == n)
      expect(holds(BcKind::DplusPlus, s.form, fr, c) == holds(BcKind::NminusMinus, jb, fr, c), "D++ iff J in N--", s);
  }
  if (failures) o.pass = false;
  o.detail = "corpora " + sizes + "; " + std::to_string(checks) + " exact checks, " + std::to_string(failures) +
             " failing";
  return o;
}

Outcome criterion_crosscheck(const Env& env) {
  using bc_samples::local_form_sample;
  using bc_samples::zero_pieces;
  Outcome o{true, "", {}};
  FormGenerator gen(8086);
  int evaluated = 0, applicable_second = 0, disagreements = 0;
  std::size_t random_primitives = 0, fixture_forms = 0;
  auto run = [&](const DarbouxFrame& fr, const BoundaryComponent& comp, const Form& beta) {
    if (beta.is_zero() || !is_primitive(fr, beta)) return;
    for (BcKind kind : all_bc_kinds()) {
      auto r = local_form_crosscheck(fr, beta, kind, comp);
      ++evaluated;
      if (r.applicable && (kind == BcKind::DplusPlus || kind == BcKind::NminusMinus)) ++applicable_second;
      if (!r.agree()) {
        ++disagreements;
        if (o.notes.size() < 10)
          o.notes.push_back(to_string(kind) + " disagrees on " + beta.to_string() + " at " + comp.name);
      }
    }
  };
  const auto& fs = env.get("IxT5");
  for (const auto& b : fs.bases) {
    if (b.space == FieldSpace::deRham) continue;
    for (auto v : {FormVariant::printed, FormVariant::corrected})
      for (const auto& f : fs.forms(b.family, b.degree, v))
        for (const auto& comp : fs.manifold.boundary()) {
          run(fs.manifold.frame(), comp, f);
          ++fixture_forms;
        }
  }
  for (int n = 2; n <= 3; ++n) {
    auto m = testing_manifolds::interval_torus(n);
    const auto& fr = m.frame();
    auto vars = FormGenerator::all_vars(n);
    for (int t = 0; t < 20; ++t) {
      int k = gen.uniform(1, n);
      for (const auto& comp : m.boundary()) {
        run(fr, comp, gen.random_primitive(fr, k, vars));
        ++random_primitives;
        for (BcKind kind : {BcKind::D, BcKind::N, BcKind::JD, BcKind::JN, BcKind::Dplus, BcKind::Nminus})
          run(fr, comp, local_form_sample(gen, fr, comp, k, zero_pieces(kind), vars));
      }
    }
  }
  o.pass = disagreements == 0 && random_primitives >= kMinRandomPrimitives && applicable_second > 0;
  o.detail = std::to_string(evaluated) + " row evaluations over " + std::to_string(fixture_forms) +
             " fixture form/component pairs and " + std::to_string(random_primitives) +
             " random primitives (+ local-form samples); " + std::to_string(applicable_second) +
             " second-order row evaluations in degree n; " + std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome criterion_negative_controls(const Env& env) {
  struct Control {
    const char* fixture;
    const char* form;
    FieldSpace space;
    BcKind bc;
  };
  using F = FieldSpace;
  using B = BcKind;
  const std::vector<Control> controls = {
      {"IxT5", "dy1", F::deRham, B::D},
      {"IxT5", "dy1", F::plus, B::Dplus},
      {"IxT5", "x1*dy2", F::plus, B::Nplus},
      {"IxT5", "dx1", F::plus, B::Nplus},
      {"IxT5", "dx1", F::minus, B::Nminus},
      {"IxT5", "dx2^dy1", F::minus, B::Dminus},
      {"IxT5", "dx1^dy1 - 1/2*(dx2^dy2 - dx3^dy3)", F::plus, B::Dplus},
      {"B3xT3", "dx1", F::plus, B::Nplus},
      {"B3xT3", "x1*dy1", F::plus, B::Nplus},
      {"B3xT3", "dx1^dy2", F::plus, B::Nplus},
      {"B3xT3", "dy1", F::minus, B::Dminus},
      {"B3xT3", "x1*dy1 + x2*dy2 + x3*dy3", F::minus, B::Dminus},
      {"B3xT3", "dy1^dy2^dy3", F::plusplus, B::DplusPlus},
      {"B3xT3", "dx1^dx2^dx3", F::minusminus, B::NminusMinus},
      {"B3xT3_tilde", "dx1", F::plus, B::Nplus},
      {"B3xT3_tilde", "dx3", F::plus, B::Nplus},
      {"B3xT3_tilde", "x1*dy1", F::plus, B::Nplus},
      {"B3xT3_tilde", "dy1^dx3", F::plus, B::Nplus},
      {"B3xT3_tilde", "dy1^dy2", F::plus, B::Nplus},
      {"B3xT3_tilde", "(dx1^dx2 - dy1^dy2)^dx3", F::minusminus, B::NminusMinus},
      {"B3xT3_tilde", "(x1*dx1 + x2*dx2 - 2*x3*dx3)^dy1", F::minus, B::Dminus},
  };
  Outcome o{true, "", {}};
  std::map<std::string, std::size_t> rejected;
  for (const auto& c : controls) {
    const auto& m = env.get(c.fixture).manifold;
    auto checks = verify_harmonic_field(m, {parse_form(m.n(), c.form), c.space, c.bc}, c.form);
    auto bad = std::find_if(checks.begin(), checks.end(),
                            [](const CheckRecord& r) { return !r.passed && !r.advisory && !r.witness.empty(); });
    if (bad == checks.end()) {
      o.pass = false;
      o.notes.push_back(std::string(c.fixture) + ": " + c.form + " was not rejected");
    } else {
      ++rejected[c.fixture];
    }
  }
  // Perturbed tables must fail and name the offending claim.
  for (const auto& fs : env.fixtures) {
    FixtureSet copy = fs;
    perturb_dimension(copy, "ph_plus_abs", 1, 1);
    auto checks = verify_fixture(copy, FormVariant::corrected);
    bool named = std::any_of(checks.begin(), checks.end(), [&](const CheckRecord& r) {
      return !r.passed && r.name == fs.name + ".dims.ph_plus_abs";
    });
    if (!named) {
      o.pass = false;
      o.notes.push_back(fs.name + ": perturbed dimension not reported");
    }
  }
  for (const auto& fs : env.fixtures) {
    std::size_t got = rejected[fs.name];
    o.detail += (o.detail.empty() ? "" : ", ") + fs.name + " " + std::to_string(got);
    if (got < kMinNegativeControls) o.pass = false;
  }
  o.detail = "rejected with witness: " + o.detail + "; perturbed dimensions named for all fixtures";
  return o;
}

std::set<int> parse_set(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Env env;
  env.data = SYMBC_DATA_DIR;
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--data" && i + 1 < argc) {
      env.data = argv[++i];
    } else if (a == "--expect-fail" && i + 1 < argc) {
      expected_fail = parse_set(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--data DIR] [--expect-fail LIST]\n";
      return 2;
    }
  }
  for (const char* name : {"IxT5", "B3xT3", "B3xT3_tilde"}) env.fixtures.push_back(load_fixture(env.data, name));

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"operator identity suite", [] { return criterion_identities(); }},
      {"dimension tables", [&] { return criterion_dimensions(env); }},
      {"printed basis forms are harmonic fields with the claimed condition", [&] { return criterion_printed_bases(env); }},
      {"index zero", [&] { return criterion_index(env); }},
      {"route equivalence", [&] { return criterion_routes(env); }},
      {"pairing nondegeneracy", [&] { return criterion_pairing(env); }},
      {"boundary-condition coherence", [&] { return criterion_bc_coherence(env); }},
      {"local-form tables vs boundary checks", [&] { return criterion_crosscheck(env); }},
      {"negative controls", [&] { return criterion_negative_controls(env); }},
  };

  auto t0 = std::chrono::steady_clock::now();
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " -- "
              << o.detail << "\n";
    for (const auto& note : o.notes) std::cout << "    note: " << note << "\n";
    std::cout.flush();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", seconds_since(t0));
  std::cout << "summary: " << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass in "
            << buf << " s";
  if (!expected_fail.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected_fail) std::cout << " " << id;
  }
  std::cout << "\n";
  return failed == expected_fail ? 0 : 1;
}
