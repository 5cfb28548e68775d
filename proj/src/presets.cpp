#include "gelfand/presets.hpp"

#include <cmath>
#include <set>

#include "gelfand/error.hpp"
#include "gelfand/io.hpp"

namespace gelfand {

namespace {

std::string cycle_through(int first, int last) {
  std::string s = "(";
  for (int i = first; i <= last; ++i) s += std::to_string(i) + (i < last ? " " : ")");
  return s;
}

int parse_n(std::string_view text, std::string_view what) {
  int n = 0;
  if (text.empty()) throw ParseError(std::string(what) + ": missing n");
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(std::string(what) + ": bad n '" + std::string(text) + "'");
    n = n * 10 + (c - '0');
    if (n > 1000) throw ParseError(std::string(what) + ": n too large");
  }
  return n;
}

CheckResult result(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

int find_coset(const CosetLabels& labels, const Partition& p) {
  for (std::size_t i = 0; i < labels.coset_types.size(); ++i)
    if (labels.coset_types[i] == p) return static_cast<int>(i);
  throw Error("no double coset of type " + p.to_string());
}

std::vector<CheckResult> verify_s2n_bn(const PairInstance& inst, const PairData& pair) {
  std::vector<CheckResult> out;
  const GroupTable& g = *pair.group;
  const auto labels = coset_labels(inst, pair.cosets);

  std::size_t bad = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (coset_type(g.element(static_cast<ElementId>(x))) != labels.coset_types[static_cast<std::size_t>(pair.cosets.dc_of[x])])
      ++bad;
  out.push_back(result("coset type constant on double cosets", bad == 0,
                       std::to_string(g.order()) + " elements, " + std::to_string(bad) + " off"));

  std::set<Partition> distinct(labels.coset_types.begin(), labels.coset_types.end());
  const auto pn = partitions_of(inst.n).size();
  out.push_back(result("coset types index the double cosets",
                       distinct.size() == labels.coset_types.size() && distinct.size() == pn,
                       std::to_string(distinct.size()) + " types, p(" + std::to_string(inst.n) +
                           ") = " + std::to_string(pn)));

  if (!pair.gelfand.gelfand) return out;
  std::size_t hook_bad = 0, inverse_bad = 0, triples = 0;
  std::string first;
  const auto parts = partitions_of(inst.n);
  for (const auto& l : parts)
    for (const auto& d : parts)
      for (const auto& r : parts) {
        ++triples;
        const auto want = pair.tensor(static_cast<std::size_t>(find_coset(labels, l)),
                                      static_cast<std::size_t>(find_coset(labels, d)),
                                      static_cast<std::size_t>(find_coset(labels, r)));
        try {
          auto h = hss_coeff(inst, pair, l, d, r);
          if (h.value != want) ++hook_bad;
          if (std::abs(h.inverse_form - static_cast<double>(want)) > 1e-6) ++inverse_bad;
        } catch (const Error& e) {
          ++hook_bad;
          if (first.empty()) first = std::string("; ") + e.what();
        }
      }
  out.push_back(result("hook-product coefficient form vs oracle", hook_bad == 0,
                       std::to_string(triples) + " triples, " + std::to_string(hook_bad) +
                           " mismatches; reading H as dim/|S_2n| mismatches " + std::to_string(inverse_bad) +
                           first));
  return out;
}

std::vector<CheckResult> verify_sn_sn1(const PairInstance& inst, const PairData& pair) {
  std::vector<CheckResult> out;
  const GroupTable& g = *pair.group;
  const auto labels = coset_labels(inst, pair.cosets);
  const auto& prod = *inst.product;

  std::size_t bad = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto [a, b] = prod.decode(static_cast<ElementId>(x));
    if (pair_label(compose(a, b)) != labels.pair_labels[static_cast<std::size_t>(pair.cosets.dc_of[x])]) ++bad;
  }
  out.push_back(result("(i,λ) label constant on double cosets", bad == 0,
                       std::to_string(g.order()) + " elements, " + std::to_string(bad) + " off"));

  std::set<PairLabel> distinct(labels.pair_labels.begin(), labels.pair_labels.end());
  const auto expected = pair_labels_of(inst.n).size();
  out.push_back(result("(i,λ) labels index the double cosets",
                       distinct.size() == labels.pair_labels.size() && distinct.size() == expected,
                       std::to_string(distinct.size()) + " labels, expected " + std::to_string(expected)));

  const auto f = factorial(inst.n - 1);
  std::size_t size_bad = 0;
  for (std::size_t c = 0; c < pair.cosets.count(); ++c)
    if (pair.cosets.sizes[c] * partition_stats(labels.pair_labels[c].lambda).z != f * f) ++size_bad;
  out.push_back(result("double coset sizes (n-1)!^2/z_λ", size_bad == 0,
                       std::to_string(size_bad) + " of " + std::to_string(pair.cosets.count()) + " off"));
  return out;
}

std::vector<CheckResult> verify_gxgopp(const PairInstance& inst, const PairData& pair) {
  std::vector<CheckResult> out;
  const GroupTable& base = *inst.base;
  const auto labels = coset_labels(inst, pair.cosets);
  const auto& prod = *inst.product;

  std::size_t bad = 0;
  for (std::size_t x = 0; x < pair.group->order(); ++x) {
    auto [a, b] = prod.decode(static_cast<ElementId>(x));
    if (base.class_of(base.id_of(compose(a, b))) != labels.classes[static_cast<std::size_t>(pair.cosets.dc_of[x])])
      ++bad;
  }
  std::set<int> distinct(labels.classes.begin(), labels.classes.end());
  out.push_back(result("same double coset iff ab conjugate",
                       bad == 0 && distinct.size() == labels.classes.size() &&
                           distinct.size() == base.class_count(),
                       std::to_string(pair.cosets.count()) + " cosets, " + std::to_string(base.class_count()) +
                           " classes"));

  std::size_t size_bad = 0;
  for (std::size_t c = 0; c < pair.cosets.count(); ++c)
    if (pair.cosets.sizes[c] != static_cast<std::int64_t>(base.order()) * base.class_size(labels.classes[c]))
      ++size_bad;
  out.push_back(result("|C'_λ| = |G||C_λ|", size_bad == 0, std::to_string(size_bad) + " off"));

  if (!pair.gelfand.gelfand) return out;
  const auto table = character_table(inst.base);
  const int m = static_cast<int>(pair.cosets.count());
  std::size_t red_bad = 0;
  std::string first;
  for (int l = 0; l < m; ++l)
    for (int d = 0; d < m; ++d)
      for (int r = 0; r < m; ++r) {
        try {
          auto kp = structure_coeff(pair, l, d, r);
          auto c = frobenius_center_coeff(*table, labels.classes[static_cast<std::size_t>(l)],
                                          labels.classes[static_cast<std::size_t>(d)],
                                          labels.classes[static_cast<std::size_t>(r)]);
          if (kp != static_cast<std::int64_t>(base.order()) * c) ++red_bad;
        } catch (const Error& e) {
          ++red_bad;
          if (first.empty()) first = std::string("; ") + e.what();
        }
      }
  out.push_back(result("k' = |G| c", red_bad == 0,
                       std::to_string(m * m * m) + " triples, " + std::to_string(red_bad) + " mismatches" + first));
  return out;
}

}  // namespace

GroupPtr symmetric_group(int n, std::size_t cap) {
  if (n < 1) throw Error("symmetric_group: n must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(parse_cycles("(1 2)", n));
  if (n >= 3) gens.push_back(parse_cycles(cycle_through(1, n), n));
  return generate_group(n, gens, cap, "S" + std::to_string(n));
}

Subgroup hyperoctahedral(const GroupPtr& s2n) {
  const int deg = s2n->degree();
  if (deg % 2 != 0) throw Error("hyperoctahedral: odd degree");
  const int n = deg / 2;
  std::vector<Permutation> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back(parse_cycles("(" + std::to_string(2 * i - 1) + " " + std::to_string(2 * i) + ")", deg));
  for (int i = 1; i < n; ++i)
    gens.push_back(parse_cycles("(" + std::to_string(2 * i - 1) + " " + std::to_string(2 * i + 1) + ")(" +
                                    std::to_string(2 * i) + " " + std::to_string(2 * i + 2) + ")",
                                deg));
  auto k = make_subgroup(s2n, gens);
  const auto want = (std::int64_t{1} << n) * factorial(n);
  if (static_cast<std::int64_t>(k.order()) != want)
    throw InternalError("B_" + std::to_string(n) + " has order " + std::to_string(k.order()));
  return k;
}

Subgroup stabilizer_of_first(const GroupPtr& sn) {
  const int n = sn->degree();
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(parse_cycles("(2 3)", n));
  if (n >= 4) gens.push_back(parse_cycles(cycle_through(2, n), n));
  auto k = make_subgroup(sn, gens);
  if (static_cast<std::int64_t>(k.order()) != factorial(n - 1))
    throw InternalError("point stabilizer has order " + std::to_string(k.order()));
  return k;
}

PairInstance parse_pair(std::string_view spec, std::size_t cap) {
  PairInstance inst;
  inst.spec = std::string(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("pair spec '" + inst.spec + "' has no ':'");
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);

  if (kind == "s2n-bn") {
    inst.kind = PairKind::s2n_bn;
    inst.n = parse_n(arg, "s2n-bn");
    if (inst.n < 1) throw ParseError("s2n-bn: n must be at least 1");
    inst.group = symmetric_group(2 * inst.n, cap);
    inst.K = hyperoctahedral(inst.group);
  } else if (kind == "sn-sn1") {
    inst.kind = PairKind::sn_sn1;
    inst.n = parse_n(arg, "sn-sn1");
    if (inst.n < 2) throw ParseError("sn-sn1: n must be at least 2");
    inst.base = symmetric_group(inst.n, cap);
    inst.product = product_with_opposite(inst.base, stabilizer_of_first(inst.base), cap);
    inst.group = inst.product->group;
    inst.K = inst.product->diagonal;
  } else if (kind == "gxgopp") {
    inst.kind = PairKind::gxgopp;
    inst.base = resolve_group(arg, cap);
    inst.product = product_with_opposite(inst.base, cap);
    inst.group = inst.product->group;
    inst.K = inst.product->diagonal;
  } else if (kind == "custom") {
    inst.kind = PairKind::custom;
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw ParseError("custom pair needs '<G.json>,<K.json>'");
    const auto gs = load_group_spec(std::string(arg.substr(0, comma)));
    const auto ks = load_group_spec(std::string(arg.substr(comma + 1)));
    if (gs.degree != ks.degree)
      throw ParseError("custom pair: K has degree " + std::to_string(ks.degree) + ", G has " +
                       std::to_string(gs.degree));
    inst.group = group_from_spec(gs, cap);
    for (const auto& p : ks.generators)
      if (!inst.group->find(p)) throw ParseError("custom pair: generator " + p.to_cycle_string() + " of K is not in G");
    inst.K = make_subgroup(inst.group, ks.generators);
  } else {
    throw ParseError("unknown pair kind '" + std::string(kind) + "'");
  }
  return inst;
}

CosetLabels coset_labels(const PairInstance& inst, const DoubleCosetPartition& dc) {
  CosetLabels out;
  const GroupTable& g = *inst.group;
  for (auto rep : dc.reps) {
    switch (inst.kind) {
      case PairKind::s2n_bn: {
        auto t = coset_type(g.element(rep));
        out.text.push_back(t.to_string());
        out.coset_types.push_back(std::move(t));
        break;
      }
      case PairKind::sn_sn1: {
        auto [a, b] = inst.product->decode(rep);
        auto label = pair_label(compose(a, b));
        out.text.push_back(label.to_string());
        out.pair_labels.push_back(std::move(label));
        break;
      }
      case PairKind::gxgopp: {
        auto [a, b] = inst.product->decode(rep);
        int c = inst.base->class_of(inst.base->id_of(compose(a, b)));
        out.text.push_back(inst.base->element(inst.base->class_rep(c)).to_cycle_string());
        out.classes.push_back(c);
        break;
      }
      case PairKind::custom:
        out.text.push_back(g.element(rep).to_cycle_string());
        break;
    }
  }
  return out;
}

std::vector<Partition> hss_thetas(const PairInstance& inst, const PairData& pair) {
  if (inst.kind != PairKind::s2n_bn) throw Error("hss_thetas: needs the s2n-bn pair");
  const GroupTable& g = *pair.group;
  const CharTable& t = *pair.table;
  std::vector<Partition> mu;
  for (std::size_t c = 0; c < g.class_count(); ++c) mu.push_back(cycle_type(g.element(g.class_rep(static_cast<int>(c)))));

  std::vector<Partition> out;
  for (auto i : pair.constituents) {
    std::vector<Partition> hits;
    for (const auto& theta : partitions_of(inst.n)) {
      const auto two = theta.doubled();
      bool same = true;
      for (std::size_t c = 0; c < mu.size() && same; ++c) {
        auto v = t.values[i][c].as_integer();
        same = v && *v == mn_character(two, mu[c]);
      }
      if (same) hits.push_back(theta);
    }
    if (hits.size() != 1)
      throw InternalError("constituent " + std::to_string(i) + " matches " + std::to_string(hits.size()) +
                          " characters χ^{2θ}");
    out.push_back(hits[0]);
  }
  return out;
}

HssValue hss_coeff(const PairInstance& inst, const PairData& pair, const Partition& l, const Partition& d,
                   const Partition& r) {
  if (pair.zonal.empty()) throw Error("hss_coeff: not a Gelfand pair");
  const auto labels = coset_labels(inst, pair.cosets);
  const auto thetas = hss_thetas(inst, pair);
  const int il = find_coset(labels, l), id = find_coset(labels, d), ir = find_coset(labels, r);
  const auto& sz = pair.cosets.sizes;
  const double order = static_cast<double>(pair.group->order());

  HssValue v;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const auto& w = pair.zonal[t];
    auto phi = [&](int c) { return static_cast<double>(sz[static_cast<std::size_t>(c)]) * w[static_cast<std::size_t>(c)]; };
    const Complex ppp = phi(il) * phi(id) * phi(ir);
    const double hook = static_cast<double>(partition_stats(thetas[t].doubled()).hook_product);
    const double literal = static_cast<double>(pair.degrees[t]) / order;
    v.hook_form += ppp / hook;
    v.inverse_form += ppp / literal;
  }
  v.hook_form /= static_cast<double>(sz[static_cast<std::size_t>(ir)]);
  v.inverse_form /= static_cast<double>(sz[static_cast<std::size_t>(ir)]);
  v.zonal_form = structure_coeff_raw(pair, il, id, ir);
  if (std::abs(v.hook_form - v.zonal_form) > 1e-6 * std::max(1.0, std::abs(v.zonal_form)))
    throw InternalError("hook form " + std::to_string(v.hook_form.real()) + " differs from zonal form " +
                        std::to_string(v.zonal_form.real()));
  v.value = checked_integer(v.hook_form, "hook-product coefficient");
  return v;
}

std::vector<CheckResult> verify_preset(const PairInstance& inst, const PairData& pair) {
  switch (inst.kind) {
    case PairKind::s2n_bn:
      return verify_s2n_bn(inst, pair);
    case PairKind::sn_sn1:
      return verify_sn_sn1(inst, pair);
    case PairKind::gxgopp:
      return verify_gxgopp(inst, pair);
    case PairKind::custom:
      break;
  }
  return {};
}

}  // namespace gelfand
