#include "symbc/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "symbc/parse.hpp"

namespace symbc {

namespace {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(what + ": " + e.what());
  }
}

int coordinate_index(const std::string& name, int n) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) throw DataError("bad coordinate name " + name);
  int i = 0;
  try {
    i = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw DataError("bad coordinate name " + name);
  }
  if (i < 1 || i > n) throw DataError("coordinate out of range: " + name);
  return 2 * (i - 1) + (name[0] == 'y');
}

FieldSpace space_from_json(const json& j) {
  auto s = field_space_from_string(j.get<std::string>());
  if (!s) throw DataError("unknown space " + j.dump());
  return *s;
}

BcKind bc_from_json(const json& j) {
  auto b = bc_from_string(j.get<std::string>());
  if (!b) throw DataError("unknown boundary condition " + j.dump());
  return *b;
}

std::string family_label(const std::string& fixture, const ClaimedBasis& b) {
  return fixture + "." + b.family + ".k" + std::to_string(b.degree);
}

CheckRecord record(std::string name, bool passed, std::string witness = {}) {
  return {std::move(name), passed, passed ? std::string() : std::move(witness), false};
}

// Parses every form of a basis; failures become check records.
std::vector<Form> parse_basis(const ClaimedBasis& b, int n, FormVariant v, const std::string& label,
                              CheckList& out) {
  std::vector<Form> forms;
  for (std::size_t i = 0; i < b.forms.size(); ++i) {
    const std::string& text = b.forms[i].text(v);
    try {
      Form f = parse_form(n, text);
      if (f.degree() != b.degree && !f.is_zero()) {
        out.push_back(record(label + "[" + std::to_string(i) + "].degree", false, text));
        continue;
      }
      forms.push_back(f);
    } catch (const ParseError& e) {
      out.push_back(record(label + "[" + std::to_string(i) + "].parse", false, text + ": " + e.what()));
    }
  }
  return forms;
}

}  // namespace

std::string to_string(FieldSpace s) {
  switch (s) {
    case FieldSpace::plus: return "plus";
    case FieldSpace::minus: return "minus";
    case FieldSpace::plusplus: return "plusplus";
    case FieldSpace::minusminus: return "minusminus";
    case FieldSpace::deRham: return "deRham";
  }
  return "?";
}

std::optional<FieldSpace> field_space_from_string(const std::string& s) {
  for (auto v : {FieldSpace::plus, FieldSpace::minus, FieldSpace::plusplus, FieldSpace::minusminus,
                 FieldSpace::deRham})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::vector<OperatorKind> field_equations(FieldSpace space, int k, int n) {
  using O = OperatorKind;
  switch (space) {
    case FieldSpace::plus:
      if (k == n) return {O::delPlusDelMinus, O::delPlusStar};
      return {O::delPlus, O::delPlusStar};
    case FieldSpace::minus:
      if (k == n) return {O::delMinus, O::delPlusDelMinusStar};
      return {O::delMinus, O::delMinusStar};
    case FieldSpace::plusplus: return {O::delPlusDelMinus, O::delPlusStar};
    case FieldSpace::minusminus: return {O::delMinus, O::delPlusDelMinusStar};
    case FieldSpace::deRham: return {O::d, O::dStar};
  }
  return {};
}

bool all_passed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.advisory || c.passed; });
}

void append(CheckList& into, const CheckList& more) { into.insert(into.end(), more.begin(), more.end()); }

CheckList verify_harmonic_field(const ManifoldDescriptor& m, const HarmonicFieldClaim& claim,
                                const std::string& label) {
  CheckList out;
  const Form& f = claim.form;
  const auto& frame = m.frame();
  if (!m.is_manifold_form(f)) {
    out.push_back(record(label + ".periodic", false, f.to_string()));
    return out;
  }
  if (claim.space != FieldSpace::deRham) {
    bool prim = f.degree() <= m.n() && is_primitive(frame, f);
    out.push_back(record(label + ".primitive", prim,
                         f.degree() > m.n() ? "degree exceeds n" : dual_Lambda(frame, f).to_string()));
  }
  for (OperatorKind op : field_equations(claim.space, f.degree(), m.n())) {
    Form r = apply_operator(frame, op, f);
    out.push_back(record(label + "." + to_string(op), r.is_zero(), r.to_string()));
  }
  BcVerdict v = evaluate_bc(claim.bc, f, m);
  std::string witness;
  for (const auto& c : v.components)
    if (!c.holds) {
      witness = c.component + ": " + (c.residual ? c.residual->to_string() : std::string("fails"));
      break;
    }
  out.push_back(record(label + "." + to_string(claim.bc), v.holds, witness));
  return out;
}

ManifoldDescriptor manifold_from_json(const std::string& text) {
  json j = parse_json(text, "manifold descriptor");
  try {
    int n = j.at("n").get<int>();
    if (n < 1 || 2 * n > kMaxVars) throw DataError("n out of range");
    std::vector<Factor> factors;
    for (const auto& fj : j.at("factors")) {
      std::string kind = fj.at("kind").get<std::string>();
      std::vector<int> vars;
      for (const auto& c : fj.at("coords")) vars.push_back(coordinate_index(c.get<std::string>(), n));
      if (kind == "interval") {
        if (vars.size() != 1) throw DataError("an interval factor takes one coordinate");
        factors.push_back({FactorKind::Interval, vars});
      } else if (kind == "ball3") {
        if (vars.size() != 3) throw DataError("a ball3 factor takes three coordinates");
        factors.push_back({FactorKind::Ball3, vars});
      } else if (kind == "torus") {
        factors.push_back({FactorKind::TorusCoord, vars});
      } else {
        throw DataError("unknown factor kind " + kind);
      }
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("omega_pairs")) {
      int a = p.at(0).get<int>(), b = p.at(1).get<int>();
      if (a < 1 || b < 1 || a > 2 * n || b > 2 * n) throw DataError("omega pair index out of range");
      pairs.emplace_back(a - 1, b - 1);
    }
    int jsign = j.value("jsign", 1);
    std::string name = j.value("name", std::string("manifold"));
    return ManifoldDescriptor(name, factors, DarbouxFrame(n, pairs, jsign));
  } catch (const json::exception& e) {
    throw DataError(std::string("manifold descriptor: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("manifold descriptor: ") + e.what());
  }
}

ManifoldDescriptor load_manifold(const std::filesystem::path& file) { return manifold_from_json(read_file(file)); }

const std::string& ClaimedForm::text(FormVariant v) const {
  return v == FormVariant::corrected && !corrected.empty() ? corrected : printed;
}

const ClaimedBasis* FixtureSet::find(const std::string& family, int degree) const {
  for (const auto& b : bases)
    if (b.family == family && b.degree == degree) return &b;
  return nullptr;
}

std::vector<Form> FixtureSet::forms(const std::string& family, int degree, FormVariant v) const {
  std::vector<Form> out;
  if (const auto* b = find(family, degree))
    for (const auto& f : b->forms) out.push_back(parse_form(manifold.n(), f.text(v)));
  return out;
}

const std::vector<std::string>& dimension_rows() {
  static const std::vector<std::string> rows = {"de_rham_abs",  "de_rham_rel",  "ph_plus_abs",
                                                "ph_minus_abs", "ph_plus_rel", "ph_minus_rel"};
  return rows;
}

std::vector<int> table_row(const CohomologyTable& t, const std::string& row) {
  if (row == "de_rham_abs") return t.de_rham_abs;
  if (row == "de_rham_rel") return t.de_rham_rel;
  if (row == "ph_plus_abs") return t.ph_plus_abs;
  if (row == "ph_minus_abs") return t.ph_minus_abs;
  if (row == "ph_plus_rel") return t.ph_plus_rel;
  if (row == "ph_minus_rel") return t.ph_minus_rel;
  throw std::invalid_argument("unknown dimension row " + row);
}

FixtureSet load_fixture(const std::filesystem::path& data_dir, const std::string& name) {
  auto file = data_dir / "fixtures" / (name + ".json");
  if (!std::filesystem::exists(file)) throw DataError("unknown fixture " + name);
  json j = parse_json(read_file(file), file.string());
  try {
    auto manifold = load_manifold(data_dir / "manifolds" / (j.at("manifold").get<std::string>() + ".json"));
    FixtureSet fs{j.at("name").get<std::string>(), j.value("description", std::string()), manifold, {}, {}};
    for (const auto& [row, dims] : j.at("expected").items()) {
      table_row(CohomologyTable{}, row);
      fs.expected[row] = dims.get<std::vector<int>>();
    }
    for (const auto& bj : j.at("bases")) {
      ClaimedBasis b;
      b.family = bj.at("family").get<std::string>();
      table_row(CohomologyTable{}, b.family);
      b.degree = bj.at("degree").get<int>();
      b.space = space_from_json(bj.at("space"));
      b.bc = bc_from_json(bj.at("bc"));
      if (bj.contains("also_report"))
        for (const auto& a : bj["also_report"]) b.also_report.push_back(bc_from_json(a));
      for (const auto& fj : bj.at("forms")) {
        if (fj.is_string())
          b.forms.push_back({fj.get<std::string>(), {}, {}});
        else
          b.forms.push_back({fj.at("printed").get<std::string>(), fj.value("corrected", std::string()),
                             fj.value("note", std::string())});
      }
      fs.bases.push_back(std::move(b));
    }
    return fs;
  } catch (const json::exception& e) {
    throw DataError(file.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(file.string() + ": " + e.what());
  }
}

std::vector<std::string> list_fixtures(const std::filesystem::path& data_dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir / "fixtures"))
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

void perturb_dimension(FixtureSet& fs, const std::string& row, int k, int delta) {
  auto it = fs.expected.find(row);
  if (it == fs.expected.end() || k < 0 || k >= static_cast<int>(it->second.size()))
    throw std::invalid_argument("no expected dimension " + row + "[" + std::to_string(k) + "]");
  it->second[k] += delta;
}

int constant_rank(const std::vector<Form>& forms) {
  std::map<std::pair<std::uint16_t, std::vector<std::uint8_t>>, int> coords;
  for (const auto& f : forms)
    for (const auto& [w, p] : f.terms())
      for (const auto& [mono, c] : p.terms())
        coords.emplace(std::make_pair(w.bits, std::vector<std::uint8_t>(mono.exp.begin(), mono.exp.end())), 0);
  int row = 0;
  for (auto& [key, idx] : coords) idx = row++;
  Matrix m(row, static_cast<int>(forms.size()));
  for (std::size_t col = 0; col < forms.size(); ++col)
    for (const auto& [w, p] : forms[col].terms())
      for (const auto& [mono, c] : p.terms())
        m.at(coords.at({w.bits, std::vector<std::uint8_t>(mono.exp.begin(), mono.exp.end())}), static_cast<int>(col)) =
            c;
  return m.rank();
}

CheckList verify_fixture(const FixtureSet& fs, FormVariant variant) {
  CheckList out;
  const auto& m = fs.manifold;
  int n = m.n();
  CohomologyTable table = cohomology_table(m);
  for (const auto& row : dimension_rows()) {
    auto it = fs.expected.find(row);
    if (it == fs.expected.end()) continue;
    auto got = table_row(table, row);
    std::string witness = "computed";
    for (int d : got) witness += " " + std::to_string(d);
    out.push_back(record(fs.name + ".dims." + row, got == it->second, witness));
  }

  for (const auto& b : fs.bases) {
    std::string label = family_label(fs.name, b);
    auto forms = parse_basis(b, n, variant, label, out);
    auto exp = fs.expected.find(b.family);
    int claimed = exp == fs.expected.end() || b.degree >= static_cast<int>(exp->second.size())
                      ? -1
                      : exp->second[b.degree];
    out.push_back(record(label + ".count", static_cast<int>(b.forms.size()) == claimed,
                         std::to_string(b.forms.size()) + " forms for dimension " + std::to_string(claimed)));
    int rank = constant_rank(forms);
    out.push_back(record(label + ".independent", rank == static_cast<int>(b.forms.size()),
                         "rank " + std::to_string(rank)));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::string fl = label + "[" + std::to_string(i) + "]";
      append(out, verify_harmonic_field(m, {forms[i], b.space, b.bc}, fl));
      for (BcKind extra : b.also_report) {
        auto v = evaluate_bc(extra, forms[i], m);
        CheckRecord r = record(fl + "." + to_string(extra), v.holds, v.holds ? "" : "condition fails");
        r.advisory = true;
        out.push_back(r);
      }
    }

    // J carries Dirichlet-type fields to the paired Neumann-type fields.
    bool plus_rel = b.family == "ph_plus_rel", minus_rel = b.family == "ph_minus_rel";
    if (!plus_rel && !minus_rel) continue;
    FieldSpace target = plus_rel ? FieldSpace::minus : FieldSpace::plus;
    BcKind target_bc = plus_rel ? (b.degree == n ? BcKind::NminusMinus : BcKind::Nminus) : BcKind::Nplus;
    std::vector<Form> images;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      Form img = conj_J(m.frame(), forms[i]);
      images.push_back(img);
      append(out, verify_harmonic_field(m, {img, target, target_bc}, label + ".J[" + std::to_string(i) + "]"));
    }
    int img_rank = constant_rank(images);
    out.push_back(record(label + ".J.rank", img_rank == static_cast<int>(forms.size()),
                         "rank " + std::to_string(img_rank)));
  }
  return out;
}

std::string matrix_text(const PiMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].to_string();
    out += "]";
  }
  return out + "]";
}

std::vector<PairingResult> pairings(const FixtureSet& fs, int k, FormVariant variant) {
  std::vector<PairingResult> out;
  const std::pair<const char*, const char*> sides[] = {{"ph_plus_abs", "ph_minus_rel"},
                                                      {"ph_minus_abs", "ph_plus_rel"}};
  for (const auto& [left, right] : sides) {
    if (!fs.find(left, k) || !fs.find(right, k)) continue;
    auto fa = fs.forms(left, k, variant);
    auto fb = fs.forms(right, k, variant);
    PairingResult r;
    r.label = fs.name + ".pairing.k" + std::to_string(k) + "." + left + "_x_" + right;
    r.matrix = pairing_matrix(fs.manifold, k, fa, fb);
    r.rank = pi_rank(r.matrix);
    r.nondegenerate = fa.size() == fb.size() && r.rank == static_cast<int>(fa.size());
    out.push_back(std::move(r));
  }
  return out;
}

CheckList pairing_check(const FixtureSet& fs, int k, FormVariant variant) {
  CheckList out;
  try {
    for (const auto& r : pairings(fs, k, variant))
      out.push_back(record(r.label, r.nondegenerate, "rank " + std::to_string(r.rank) + " of " + matrix_text(r.matrix)));
  } catch (const ParseError& e) {
    out.push_back(record(fs.name + ".pairing.k" + std::to_string(k), false, e.what()));
  }
  return out;
}

}  // namespace symbc
