#include "gelfand/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gelfand/error.hpp"

namespace gelfand {

namespace {

// Printed values are rounded to 12 decimals so float noise stays out of
// the output.
double snap(double x) {
  double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // no -0
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(15);
  os << snap(x);
  return os.str();
}

std::string complex_text(Complex z) {
  if (snap(z.imag()) == 0.0) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

Json cosets_array(const CosetLabels& labels, const GroupTable& g, const DoubleCosetPartition& dc) {
  Json arr = Json::array();
  for (std::size_t c = 0; c < dc.count(); ++c)
    arr.push_back({{"label", coset_label_json(labels, c)},
                   {"rep", g.element(dc.reps[c]).to_cycle_string()},
                   {"size", dc.sizes[c]}});
  return arr;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("group spec: expected a JSON object");
  GroupSpec spec;
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw ParseError("group spec: missing integer \"degree\"");
  spec.degree = j["degree"].get<int>();
  if (spec.degree < 1 || spec.degree > 65535) throw ParseError("group spec: degree out of range");
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw ParseError("group spec: \"generators\" must be an array");
    for (const auto& s : j["generators"]) {
      if (!s.is_string()) throw ParseError("group spec: generators must be cycle strings");
      spec.generators.push_back(parse_cycles(s.get<std::string>(), spec.degree));
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("group spec: \"name\" must be a string");
    spec.name = j["name"].get<std::string>();
  }
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

GroupPtr group_from_spec(const GroupSpec& spec, std::size_t cap) {
  return generate_group(spec.degree, spec.generators, cap, spec.name);
}

GroupPtr resolve_group(std::string_view spec, std::size_t cap) {
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 's') &&
      spec.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    if (spec.size() > 4) throw ParseError("symmetric group degree too large: " + std::string(spec));
    int n = std::stoi(std::string(spec.substr(1)));
    if (n < 1) throw ParseError("symmetric group degree must be positive");
    return symmetric_group(n, cap);
  }
  return group_from_spec(load_group_spec(std::string(spec)), cap);
}

Json complex_json(Complex z) { return {{"re", snap(z.real())}, {"im", snap(z.imag())}}; }

Json partition_json(const Partition& p) { return Json(p.parts()); }

Json pair_label_json(const PairLabel& l) { return {{"i", l.i}, {"lambda", partition_json(l.lambda)}}; }

Json coset_label_json(const CosetLabels& labels, std::size_t coset) {
  if (!labels.coset_types.empty()) return partition_json(labels.coset_types[coset]);
  if (!labels.pair_labels.empty()) return pair_label_json(labels.pair_labels[coset]);
  return labels.text[coset];
}

std::string Csv::str() const {
  std::string out;
  std::vector<std::string> f;
  for (const auto& h : header) f.push_back(csv_field(h));
  out += join(f, ",") + "\n";
  for (const auto& row : rows) {
    f.clear();
    for (const auto& x : row) f.push_back(csv_field(x));
    out += join(f, ",") + "\n";
  }
  return out;
}

Rendered render_classes(const GroupTable& g) {
  Rendered r;
  r.json = {{"group", g.name()}, {"order", g.order()}, {"classes", Json::array()}};
  r.csv.header = {"class", "rep", "size", "element_order"};
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& rep = g.element(g.class_rep(static_cast<int>(c)));
    const auto size = g.class_size(static_cast<int>(c));
    r.json["classes"].push_back(
        {{"class", c}, {"rep", rep.to_cycle_string()}, {"size", size}, {"element_order", rep.order()}});
    r.csv.rows.push_back({std::to_string(c), rep.to_cycle_string(), std::to_string(size), std::to_string(rep.order())});
  }
  return r;
}

Rendered render_chartable(const CharTable& t) {
  const GroupTable& g = *t.group;
  Rendered r;
  r.json = {{"group", g.name()}, {"order", g.order()}, {"exponent", t.exponent}, {"prime", t.prime},
            {"classes", Json::array()}, {"irreducibles", Json::array()}};
  r.csv.header = {"irreducible", "degree"};
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto rep = g.element(g.class_rep(static_cast<int>(c))).to_cycle_string();
    r.json["classes"].push_back({{"rep", rep}, {"size", g.class_size(static_cast<int>(c))}});
    r.csv.header.push_back(rep);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array(), exact = Json::array();
    std::vector<std::string> row{std::to_string(i), std::to_string(t.degrees[i])};
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      values.push_back(complex_json(t.approx[i][c]));
      Json terms = Json::array();
      const auto& v = t.values[i][c];
      for (std::size_t k = 0; k < v.mult.size(); ++k)
        if (v.mult[k]) terms.push_back({k, v.mult[k]});
      exact.push_back(terms);
      row.push_back(complex_text(t.approx[i][c]));
    }
    r.json["irreducibles"].push_back({{"degree", t.degrees[i]}, {"values", values}, {"exact", exact}});
    r.csv.rows.push_back(std::move(row));
  }
  return r;
}

Rendered render_cosets(const PairInstance& inst, const DoubleCosetPartition& dc) {
  const auto labels = coset_labels(inst, dc);
  Rendered r;
  r.json = {{"pair", inst.spec},
            {"order", inst.group->order()},
            {"subgroup_order", inst.K.order()},
            {"cosets", cosets_array(labels, *inst.group, dc)}};
  r.csv.header = {"coset", "label", "rep", "size"};
  for (std::size_t c = 0; c < dc.count(); ++c)
    r.csv.rows.push_back({std::to_string(c), labels.text[c], inst.group->element(dc.reps[c]).to_cycle_string(),
                          std::to_string(dc.sizes[c])});
  return r;
}

Rendered render_gelfand(const PairInstance& inst, const PairData& pair) {
  const auto& g = pair.gelfand;
  Rendered r;
  r.json = {{"pair", inst.spec},
            {"gelfand", g.gelfand},
            {"multiplicity_free", g.multiplicity_free},
            {"commutative", g.commutative},
            {"cosets", pair.cosets.count()},
            {"multiplicities", g.multiplicities}};
  r.csv.header = {"irreducible", "degree", "multiplicity"};
  for (std::size_t i = 0; i < g.multiplicities.size(); ++i)
    r.csv.rows.push_back({std::to_string(i), std::to_string(pair.table->degrees[i]), std::to_string(g.multiplicities[i])});
  return r;
}

Rendered render_zonal(const PairInstance& inst, const PairData& pair) {
  const auto labels = coset_labels(inst, pair.cosets);
  Rendered r;
  Json constituents = Json::array(), omega = Json::array();
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    constituents.push_back({{"irreducible", pair.constituents[t]}, {"degree", pair.degrees[t]}});
    Json row = Json::array();
    for (auto w : pair.zonal[t]) row.push_back(complex_json(w));
    omega.push_back(row);
  }
  r.json = {{"pair", inst.spec},
            {"cosets", cosets_array(labels, *pair.group, pair.cosets)},
            {"constituents", constituents},
            {"omega", omega}};
  r.csv.header = {"constituent", "degree"};
  for (const auto& s : labels.text) r.csv.header.push_back(s);
  for (std::size_t t = 0; t < pair.constituents.size(); ++t) {
    std::vector<std::string> row{std::to_string(pair.constituents[t]), std::to_string(pair.degrees[t])};
    for (auto w : pair.zonal[t]) row.push_back(complex_text(w));
    r.csv.rows.push_back(std::move(row));
  }
  return r;
}

Rendered render_coeffs(const PairInstance& inst, const PairData& pair, const CoeffTable* formula,
                       const CoeffTable* oracle) {
  if (!formula && !oracle) throw Error("render_coeffs: no table");
  const auto labels = coset_labels(inst, pair.cosets);
  const CoeffTable& main = formula ? *formula : *oracle;
  const bool both = formula && oracle;

  Rendered r;
  r.json = {{"pair", inst.spec},
            {"method", both ? "both" : CoeffTable::method_name(main.method)},
            {"entries", Json::array()}};
  r.csv.header = {"lhs", "rhs", "value"};
  if (both) r.csv.header.insert(r.csv.header.end(), {"formula", "oracle", "agree"});
  for (std::size_t e = 0; e < main.entries.size(); ++e) {
    const auto& en = main.entries[e];
    Json lhs = Json::array();
    std::vector<std::string> lhs_text;
    for (int l : en.lhs) {
      lhs.push_back(coset_label_json(labels, static_cast<std::size_t>(l)));
      lhs_text.push_back(labels.text[static_cast<std::size_t>(l)]);
    }
    const auto& rhs_text = labels.text[static_cast<std::size_t>(en.rhs)];
    Json row = {{"lhs", lhs}, {"rhs", coset_label_json(labels, static_cast<std::size_t>(en.rhs))}, {"value", en.value}};
    std::vector<std::string> csv_row{join(lhs_text, " "), rhs_text, std::to_string(en.value)};
    if (both) {
      const auto o = oracle->entries[e].value;
      row["formula"] = en.value;
      row["oracle"] = o;
      row["agree"] = o == en.value;
      csv_row.insert(csv_row.end(), {std::to_string(en.value), std::to_string(o), o == en.value ? "true" : "false"});
    }
    r.json["entries"].push_back(row);
    r.csv.rows.push_back(std::move(csv_row));
  }
  return r;
}

Rendered render_moments(const GroupTable& g, const std::vector<MomentRow>& rows) {
  Rendered r;
  r.json = {{"group", g.name()}, {"rows", Json::array()}};
  r.csv.header = {"class", "m", "direct", "structural", "equal"};
  for (const auto& row : rows) {
    const auto cls = g.element(g.class_rep(row.cls)).to_cycle_string();
    const std::string direct = row.direct.exact ? to_string(*row.direct.exact) : complex_text(row.direct.approx);
    r.json["rows"].push_back({{"class", cls},
                              {"m", row.m},
                              {"direct", direct},
                              {"structural", to_string(row.structural)},
                              {"equal", row.equal}});
    r.csv.rows.push_back({cls, std::to_string(row.m), direct, to_string(row.structural), row.equal ? "true" : "false"});
  }
  return r;
}

Rendered render_checks(const std::string& subject, const std::vector<CheckResult>& checks) {
  Rendered r;
  bool all = true;
  Json arr = Json::array();
  r.csv.header = {"check", "passed", "detail"};
  for (const auto& c : checks) {
    all = all && c.passed;
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.csv.rows.push_back({c.name, c.passed ? "true" : "false", c.detail});
  }
  r.json = {{"subject", subject}, {"passed", all}, {"checks", arr}};
  return r;
}

}  // namespace gelfand
