#include "symbc/symbc.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "symbc/fixtures.hpp"
#include "symbc/identities.hpp"
#include "symbc/parse.hpp"

struct symbc_manifold {
  symbc::ManifoldDescriptor value;
};

struct symbc_form {
  symbc::Form value;
};

struct symbc_report {
  std::string text;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace symbc;

thread_local std::string last_error;

symbc_status fail(symbc_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

// Maps exceptions from the engine onto status codes.
template <typename F>
symbc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(SYMBC_ERR_PARSE, e.what());
  } catch (const DataError& e) {
    std::string msg = e.what();
    bool io = msg.rfind("cannot open", 0) == 0 || msg.rfind("unknown fixture", 0) == 0;
    return fail(io ? SYMBC_ERR_IO : SYMBC_ERR_PARSE, msg);
  } catch (const std::invalid_argument& e) {
    return fail(SYMBC_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SYMBC_ERR_INTERNAL, e.what());
  }
}

symbc_status require(const void* p, const char* what) {
  return p ? SYMBC_OK : fail(SYMBC_ERR_ARGUMENT, std::string(what) + " must not be null");
}

ordered_json checks_json(const CheckList& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) j["witness"] = c.witness;
    if (c.advisory) j["advisory"] = true;
    arr.push_back(j);
  }
  return arr;
}

symbc_report* make_report(ordered_json command, const CheckList& checks, const ordered_json* tables = nullptr) {
  ordered_json doc;
  doc["command"] = std::move(command);
  std::size_t failures = 0;
  for (const auto& c : checks)
    if (!c.passed && !c.advisory) ++failures;
  doc["status"] = failures ? "fail" : "pass";
  doc["checks"] = checks_json(checks);
  if (tables) doc["tables"] = *tables;
  return new symbc_report{doc.dump(2) + "\n", checks.size(), failures};
}

ordered_json table_json(const CohomologyTable& t) {
  ordered_json j;
  for (const auto& row : dimension_rows()) j[row] = table_row(t, row);
  auto idx = euler_index(t);
  j["index"] = {{"absolute", idx.absolute}, {"relative", idx.relative}};
  j["routes_agree"] = t.routes_agree;
  return j;
}

std::vector<std::string> fixture_names(const std::string& data_dir, const std::string& fixture) {
  if (fixture == "all") return list_fixtures(data_dir);
  return {fixture};
}

const char* variant_name(symbc_variant v) { return v == SYMBC_CORRECTED ? "corrected" : "printed"; }

FormVariant to_variant(symbc_variant v) { return v == SYMBC_CORRECTED ? FormVariant::corrected : FormVariant::printed; }

}  // namespace

extern "C" {

const char* symbc_last_error(void) { return last_error.c_str(); }

const char* symbc_version(void) { return "1.0.0"; }

symbc_status symbc_manifold_load(const char* path, symbc_manifold** out) {
  if (auto s = require(path, "path"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    *out = new symbc_manifold{load_manifold(path)};
    return SYMBC_OK;
  });
}

symbc_status symbc_manifold_from_json(const char* json, symbc_manifold** out) {
  if (auto s = require(json, "json"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    *out = new symbc_manifold{manifold_from_json(json)};
    return SYMBC_OK;
  });
}

int symbc_manifold_n(const symbc_manifold* m) { return m ? m->value.n() : 0; }

void symbc_manifold_free(symbc_manifold* m) { delete m; }

symbc_status symbc_form_parse(int n, const char* text, symbc_form** out) {
  if (auto s = require(text, "text"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  if (n < 1 || 2 * n > kMaxVars) return fail(SYMBC_ERR_ARGUMENT, "n must be between 1 and 4");
  return guarded([&] {
    *out = new symbc_form{parse_form(n, text)};
    return SYMBC_OK;
  });
}

int symbc_form_degree(const symbc_form* f) { return f ? f->value.degree() : -1; }

int symbc_form_is_zero(const symbc_form* f) { return f && f->value.is_zero(); }

char* symbc_form_to_string(const symbc_form* f) {
  if (!f) return nullptr;
  std::string s = f->value.to_string();
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void symbc_form_free(symbc_form* f) { delete f; }

void symbc_string_free(char* s) { delete[] s; }

symbc_status symbc_run_identities(int n, int cases, uint64_t seed, symbc_report** out) {
  if (auto s = require(out, "out"); s) return s;
  if (n < 1 || n > 3) return fail(SYMBC_ERR_ARGUMENT, "identities support n = 1..3");
  if (cases < 1) return fail(SYMBC_ERR_ARGUMENT, "cases must be positive");
  return guarded([&] {
    auto results = run_identity_suite(n, cases, seed);
    CheckList checks;
    ordered_json counts = ordered_json::array();
    for (const auto& r : results) {
      checks.push_back({r.name, r.failed == 0, r.witness.value_or(""), false});
      counts.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}});
    }
    ordered_json tables = {{"identities", counts}};
    *out = make_report({{"name", "identities"}, {"n", n}, {"cases", cases}, {"seed", seed}}, checks, &tables);
    return SYMBC_OK;
  });
}

symbc_status symbc_run_cohomology(const symbc_manifold* m, symbc_report** out) {
  if (auto s = require(m, "manifold"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    const auto& man = m->value;
    auto t = cohomology_table(man);
    auto red = omega_const(man, man.frame().omega());
    auto idx = euler_index(t);
    CheckList checks;
    checks.push_back({"routes_agree", t.routes_agree, "Lefschetz and duality routes differ", false});
    checks.push_back({"index.absolute", idx.absolute == 0, std::to_string(idx.absolute), false});
    checks.push_back({"index.relative", idx.relative == 0, std::to_string(idx.relative), false});
    ordered_json tables = table_json(t);
    tables["omega_const"] = red.omega_const.to_string();
    ordered_json certs = ordered_json::array();
    for (const auto& c : red.certificates)
      certs.push_back({{"term", c.term.to_string()}, {"potential", c.potential.to_string()}});
    tables["exactness_certificates"] = certs;
    *out = make_report({{"name", "cohomology"}, {"manifold", man.name()}}, checks, &tables);
    return SYMBC_OK;
  });
}

symbc_status symbc_run_check_form(const symbc_manifold* m, const char* form, const char* bc, const char* space,
                                  symbc_report** out) {
  if (auto s = require(m, "manifold"); s) return s;
  if (auto s = require(form, "form"); s) return s;
  if (auto s = require(bc, "bc"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    const auto& man = m->value;
    auto kind = bc_from_string(bc);
    if (!kind) return fail(SYMBC_ERR_ARGUMENT, std::string("unknown boundary condition ") + bc);
    std::optional<FieldSpace> fs;
    if (space) {
      fs = field_space_from_string(space);
      if (!fs) return fail(SYMBC_ERR_ARGUMENT, std::string("unknown space ") + space);
    }
    Form f = parse_form(man.n(), form);
    CheckList checks;
    if (!man.is_manifold_form(f)) {
      checks.push_back({"periodic", false, "coefficients depend on a periodic coordinate", false});
    } else {
      BcVerdict v = evaluate_bc(*kind, f, man);
      for (const auto& c : v.components)
        checks.push_back({to_string(*kind) + "[" + c.component + "]", c.holds,
                          c.residual ? c.residual->to_string() : std::string(), false});
      if (fs) append(checks, verify_harmonic_field(man, {f, *fs, *kind}, "field"));
    }
    ordered_json cmd = {{"name", "check-form"}, {"manifold", man.name()}, {"form", f.to_string()}, {"bc", bc}};
    if (space) cmd["space"] = space;
    *out = make_report(cmd, checks);
    return SYMBC_OK;
  });
}

symbc_status symbc_run_verify_tables(const char* data_dir, const char* fixture, symbc_variant variant,
                                     const char* perturb, symbc_report** out) {
  if (auto s = require(data_dir, "data_dir"); s) return s;
  if (auto s = require(fixture, "fixture"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    std::string row;
    int pk = 0, delta = 0;
    if (perturb) {
      std::string p = perturb;
      auto a = p.find(':'), b = p.rfind(':');
      if (a == std::string::npos || a == b) return fail(SYMBC_ERR_ARGUMENT, "perturb must be row:k:delta");
      row = p.substr(0, a);
      try {
        pk = std::stoi(p.substr(a + 1, b - a - 1));
        delta = std::stoi(p.substr(b + 1));
      } catch (const std::exception&) {
        return fail(SYMBC_ERR_ARGUMENT, "perturb must be row:k:delta");
      }
    }
    CheckList checks;
    ordered_json tables;
    for (const auto& name : fixture_names(data_dir, fixture)) {
      auto fs = load_fixture(data_dir, name);
      if (perturb) perturb_dimension(fs, row, pk, delta);
      append(checks, verify_fixture(fs, to_variant(variant)));
      for (int k = 0; k <= fs.manifold.n(); ++k) append(checks, pairing_check(fs, k, to_variant(variant)));
      tables[name] = table_json(cohomology_table(fs.manifold));
    }
    ordered_json cmd = {{"name", "verify-tables"}, {"fixture", fixture}, {"variant", variant_name(variant)}};
    if (perturb) cmd["perturb"] = perturb;
    *out = make_report(cmd, checks, &tables);
    return SYMBC_OK;
  });
}

symbc_status symbc_run_pairing(const char* data_dir, const char* fixture, int k, symbc_variant variant,
                               symbc_report** out) {
  if (auto s = require(data_dir, "data_dir"); s) return s;
  if (auto s = require(fixture, "fixture"); s) return s;
  if (auto s = require(out, "out"); s) return s;
  return guarded([&] {
    CheckList checks;
    ordered_json tables = ordered_json::object();
    for (const auto& name : fixture_names(data_dir, fixture)) {
      auto fs = load_fixture(data_dir, name);
      int n = fs.manifold.n();
      if (k > n) return fail(SYMBC_ERR_ARGUMENT, "degree exceeds n for " + name);
      for (int j = k < 0 ? 0 : k; j <= (k < 0 ? n : k); ++j) {
        append(checks, pairing_check(fs, j, to_variant(variant)));
        for (const auto& r : pairings(fs, j, to_variant(variant))) {
          ordered_json rows = ordered_json::array();
          for (const auto& row : r.matrix) {
            ordered_json cells = ordered_json::array();
            for (const auto& v : row) cells.push_back(v.to_string());
            rows.push_back(cells);
          }
          tables[r.label] = {{"rank", r.rank}, {"matrix", rows}};
        }
      }
    }
    *out = make_report({{"name", "pairing"}, {"fixture", fixture}, {"k", k}, {"variant", variant_name(variant)}},
                       checks, &tables);
    return SYMBC_OK;
  });
}

int symbc_report_passed(const symbc_report* r) { return r && r->failures == 0; }

size_t symbc_report_check_count(const symbc_report* r) { return r ? r->checks : 0; }

size_t symbc_report_failure_count(const symbc_report* r) { return r ? r->failures : 0; }

const char* symbc_report_json(const symbc_report* r) { return r ? r->text.c_str() : ""; }

void symbc_report_free(symbc_report* r) { delete r; }

}  // extern "C"
