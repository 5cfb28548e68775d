#include <set>

#include "doctest.h"
#include "gelfand/error.hpp"
#include "gelfand/presets.hpp"
#include "helpers.hpp"

using namespace gelfand;
using testing::cyc;
using P = Partition;

namespace {

void check_all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

std::string matching(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += "(" + std::to_string(2 * i - 1) + " " + std::to_string(2 * i) + ")";
  return s;
}

}  // namespace

TEST_CASE("symmetric groups") {
  for (int n = 1; n <= 6; ++n) CHECK(symmetric_group(n)->order() == static_cast<std::size_t>(factorial(n)));
  CHECK(symmetric_group(4)->name() == "S4");
  CHECK_THROWS_AS(symmetric_group(0), Error);
}

TEST_CASE("B_n is the centralizer of the matching") {
  for (int n : {1, 2, 3}) {
    auto g = symmetric_group(2 * n);
    auto b = hyperoctahedral(g);
    CHECK(b.order() == static_cast<std::size_t>((1 << n) * factorial(n)));
    auto m = cyc(matching(n), 2 * n);
    for (std::size_t x = 0; x < g->order(); ++x) {
      const auto& p = g->element(static_cast<ElementId>(x));
      CHECK(b.contains(static_cast<ElementId>(x)) == (compose(p, m) == compose(m, p)));
    }
  }
  CHECK_THROWS_AS(hyperoctahedral(symmetric_group(3)), Error);
}

TEST_CASE("stabilizer of the first point") {
  for (int n : {2, 3, 4, 5}) {
    auto g = symmetric_group(n);
    auto k = stabilizer_of_first(g);
    CHECK(k.order() == static_cast<std::size_t>(factorial(n - 1)));
    for (auto id : k.members()) CHECK(g->element(id)[0] == 0);
  }
}

TEST_CASE("pair spec parsing") {
  auto a = parse_pair("s2n-bn:2");
  CHECK(a.kind == PairKind::s2n_bn);
  CHECK(a.group->order() == 24);
  CHECK(a.K.order() == 8);
  auto b = parse_pair("sn-sn1:4");
  CHECK(b.group->order() == 144);
  CHECK(b.K.order() == 6);
  auto c = parse_pair("gxgopp:S3");
  CHECK(c.group->order() == 36);
  auto d = parse_pair("gxgopp:" GELFAND_DATA_DIR "/s3.json");
  CHECK(d.group->order() == 36);
  auto e = parse_pair("custom:" GELFAND_DATA_DIR "/s4.json," GELFAND_DATA_DIR "/c4_in_s4.json");
  CHECK(e.group->order() == 24);
  CHECK(e.K.order() == 4);

  CHECK_THROWS_AS(parse_pair("s2n-bn"), ParseError);
  CHECK_THROWS_AS(parse_pair("s2n-bn:x"), ParseError);
  CHECK_THROWS_AS(parse_pair("s2n-bn:0"), ParseError);
  CHECK_THROWS_AS(parse_pair("sn-sn1:1"), ParseError);
  CHECK_THROWS_AS(parse_pair("bogus:3"), ParseError);
  CHECK_THROWS_AS(parse_pair("custom:" GELFAND_DATA_DIR "/s4.json"), ParseError);
  CHECK_THROWS_AS(parse_pair("gxgopp:/no/such/file.json"), ParseError);
  CHECK_THROWS_AS(parse_pair("custom:" GELFAND_DATA_DIR "/s3.json," GELFAND_DATA_DIR "/c4_in_s4.json"), ParseError);
  CHECK_THROWS_AS(parse_pair("s2n-bn:5", 100000), EnumerationOverflow);
}

TEST_CASE("coset labels") {
  auto a = parse_pair("s2n-bn:3");
  auto la = coset_labels(a, double_cosets(a.K, a.K));
  CHECK(std::set<P>(la.coset_types.begin(), la.coset_types.end()) == std::set<P>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(la.coset_types[0] == P({1, 1, 1}));

  auto b = parse_pair("sn-sn1:4");
  auto lb = coset_labels(b, double_cosets(b.K, b.K));
  CHECK(lb.pair_labels.size() == 7);
  CHECK(lb.pair_labels[0] == PairLabel{1, P({1, 1, 1})});
  auto all = pair_labels_of(4);
  CHECK(std::set<PairLabel>(lb.pair_labels.begin(), lb.pair_labels.end()) == std::set<PairLabel>(all.begin(), all.end()));

  auto c = parse_pair("gxgopp:S4");
  auto lc = coset_labels(c, double_cosets(c.K, c.K));
  CHECK(lc.classes.size() == 5);
  CHECK(lc.text[0] == "()");
}

TEST_CASE("(i,λ) double coset sizes") {
  for (int n : {2, 3, 4, 5}) {
    auto inst = parse_pair("sn-sn1:" + std::to_string(n));
    auto dc = double_cosets(inst.K, inst.K);
    auto labels = coset_labels(inst, dc);
    CHECK(dc.count() == pair_labels_of(n).size());
    const auto f = factorial(n - 1);
    for (std::size_t c = 0; c < dc.count(); ++c) CHECK(dc.sizes[c] * partition_stats(labels.pair_labels[c].lambda).z == f * f);
  }
}

TEST_CASE("hook-product form of the Hecke algebra coefficients") {
  for (int n : {2, 3}) {
    auto inst = parse_pair("s2n-bn:" + std::to_string(n));
    auto pair = build_pair(inst.group, inst.K);
    auto thetas = hss_thetas(inst, pair);
    CHECK(std::set<P>(thetas.begin(), thetas.end()).size() == partitions_of(n).size());
    const P ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    const auto bn = (std::int64_t{1} << n) * factorial(n);
    for (const auto& d : partitions_of(n))
      for (const auto& r : partitions_of(n)) CHECK(hss_coeff(inst, pair, ones, d, r).value == (d == r ? bn : 0));

    auto labels = coset_labels(inst, pair.cosets);
    int inverse_agrees = 0, triples = 0;
    for (std::size_t l = 0; l < pair.cosets.count(); ++l)
      for (std::size_t d = 0; d < pair.cosets.count(); ++d)
        for (std::size_t r = 0; r < pair.cosets.count(); ++r) {
          auto h = hss_coeff(inst, pair, labels.coset_types[l], labels.coset_types[d], labels.coset_types[r]);
          CHECK(h.value == pair.tensor(l, d, r));
          ++triples;
          if (std::abs(h.inverse_form - static_cast<double>(pair.tensor(l, d, r))) < 1e-6) ++inverse_agrees;
        }
    // reading H_2θ as χ^{2θ}(1)/|S_2n| only survives on vanishing coefficients
    CHECK(inverse_agrees < triples);
  }
  CHECK(partition_stats(P({2, 2})).hook_product == 12);  // H_{2θ} for θ = (1,1)
}

TEST_CASE("preset checks") {
  for (const char* spec : {"s2n-bn:2", "s2n-bn:3", "sn-sn1:3", "sn-sn1:4", "gxgopp:S3", "gxgopp:S4"}) {
    INFO(spec);
    auto inst = parse_pair(spec);
    auto pair = build_pair(inst.group, inst.K);
    auto checks = verify_preset(inst, pair);
    CHECK(checks.size() >= 2);
    check_all_pass(checks);
  }
}
