#include <set>

#include "doctest.h"
#include "gelfand/engine.hpp"
#include "gelfand/error.hpp"
#include "gelfand/presets.hpp"
#include "helpers.hpp"

using namespace gelfand;
using testing::cyc;
using testing::sym;

namespace {

PairData preset(const char* spec) {
  auto inst = parse_pair(spec);
  return build_pair(inst.group, inst.K);
}

void check_all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("induced multiplicities") {
  auto s4 = sym(4);
  auto t = character_table(s4);
  auto trivial = induced_multiplicities(*t, whole_group(s4));
  CHECK(trivial == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  auto regular = induced_multiplicities(*t, make_subgroup(s4, std::vector<ElementId>{}));
  CHECK(regular == t->degrees);

  auto inst = parse_pair("gxgopp:S3");
  auto pt = character_table(inst.group);
  auto m = induced_multiplicities(*pt, inst.K);
  std::multiset<std::int64_t> degs;
  int ones = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(m[i] <= 1);
    if (m[i] == 1) {
      ++ones;
      degs.insert(pt->degrees[i]);
    }
  }
  CHECK(ones == 3);
  CHECK(degs == std::multiset<std::int64_t>{1, 1, 4});
}

TEST_CASE("Gelfand check") {
  auto s4 = sym(4);
  auto t = character_table(s4);
  CHECK(is_gelfand(*t, whole_group(s4)).gelfand);
  CHECK(preset("s2n-bn:2").gelfand.gelfand);
  CHECK(preset("s2n-bn:3").gelfand.gelfand);
  CHECK(preset("sn-sn1:4").gelfand.gelfand);
  CHECK(preset("gxgopp:S3").gelfand.gelfand);

  auto c2 = make_subgroup(s4, std::vector<Permutation>{cyc("(1 2)", 4)});
  auto r = is_gelfand(*t, c2);
  CHECK_FALSE(r.gelfand);
  CHECK_FALSE(r.multiplicity_free);
  CHECK_FALSE(r.commutative);
  CHECK(r.multiplicities == std::vector<std::int64_t>{1, 0, 1, 2, 1});

  auto p = build_pair(s4, c2, t);
  CHECK(p.zonal.empty());
  CHECK_THROWS_AS(zonal_table(p), Error);
  CHECK_THROWS_AS(structure_coeff(p, 0, 0, 0), Error);
}

TEST_CASE("zonal functions") {
  auto p = preset("s2n-bn:2");
  REQUIRE(p.zonal.size() == 2);
  for (const auto& row : p.zonal) CHECK(std::abs(row[0] - 1.0) < 1e-12);
  check_all_pass({check_orthogonality(p), check_functional_equation(p), check_convolution_property(p),
                  check_morphism(p), check_identity_value(p)});
  // averaging formula agrees with coset lookup everywhere
  for (std::size_t x = 0; x < p.group->order(); ++x)
    for (std::size_t t = 0; t < 2; ++t)
      CHECK(std::abs(zonal_by_average(p, t, static_cast<ElementId>(x)) - p.omega(t, static_cast<ElementId>(x))) < 1e-12);
}

TEST_CASE("zonal functions of G x G^opp are normalized characters") {
  for (const char* g : {"S3", "S4"}) {
    auto inst = parse_pair(std::string("gxgopp:") + g);
    auto p = build_pair(inst.group, inst.K);
    auto base = inst.base;
    auto bt = character_table(base);
    const auto id = Permutation::identity(base->degree());
    std::set<std::size_t> used;
    for (std::size_t t = 0; t < p.constituents.size(); ++t) {
      int found = -1;
      for (std::size_t i = 0; i < bt->size() && found < 0; ++i) {
        bool same = p.degrees[t] == bt->degrees[i] * bt->degrees[i];
        for (std::size_t x = 0; x < base->order() && same; ++x) {
          auto u = inst.product->encode(base->element(static_cast<ElementId>(x)), id);
          same = std::abs(p.omega(t, u) - bt->at(i, static_cast<ElementId>(x)) / static_cast<double>(bt->degrees[i])) < 1e-9;
        }
        if (same) found = static_cast<int>(i);
      }
      REQUIRE(found >= 0);
      used.insert(static_cast<std::size_t>(found));
    }
    CHECK(used.size() == bt->size());
  }
}

TEST_CASE("structure coefficients from zonal functions") {
  auto p = preset("s2n-bn:2");
  const auto kn = static_cast<std::int64_t>(p.K.order());
  for (int d = 0; d < 2; ++d)
    for (int r = 0; r < 2; ++r) CHECK(structure_coeff(p, 0, d, r) == (d == r ? kn : 0));
  CHECK(structure_coeff(p, 0, 0, 0) == 8);
  check_all_pass({check_structure_vs_oracle(p)});

  auto p6 = preset("s2n-bn:3");
  check_all_pass({check_structure_vs_oracle(p6)});
  for (int l = 0; l < 3; ++l)
    for (int d = 0; d < 3; ++d)
      for (int r = 0; r < 3; ++r)
        CHECK(structure_coeff(p6, l, d, r) == p6.tensor(static_cast<std::size_t>(l), static_cast<std::size_t>(d), static_cast<std::size_t>(r)));
}

TEST_CASE("r-fold products") {
  auto p = preset("s2n-bn:2");
  for (int l = 0; l < 2; ++l)
    for (int d = 0; d < 2; ++d)
      for (int r = 0; r < 2; ++r) {
        std::vector<int> lhs{l, d};
        CHECK(structure_coeff_multi(p, lhs, r) == structure_coeff(p, l, d, r));
      }
  std::vector<int> ones{0, 0, 0};
  CHECK(structure_coeff_multi(p, ones, 0) == 64);
  std::vector<int> single{0};
  CHECK_THROWS_AS(structure_coeff_multi(p, single, 0), Error);

  auto p6 = preset("s2n-bn:3");
  std::vector<int> triple{1, 2, 2};
  auto oracle_col = oracle::multi_product_oracle(*p6.group, p6.cosets, triple);
  for (int r = 0; r < 3; ++r) CHECK(structure_coeff_multi(p6, triple, r) == oracle_col[static_cast<std::size_t>(r)]);
  check_all_pass({check_multi_vs_oracle(p, 3), check_multi_vs_oracle(p, 4)});
}

TEST_CASE("coefficient tables") {
  auto p = preset("s2n-bn:2");
  auto f = coeff_table_formula(p, 2);
  auto o = coeff_table_oracle(p, 2);
  REQUIRE(f.entries.size() == 8);
  REQUIRE(o.entries.size() == 8);
  for (std::size_t e = 0; e < 8; ++e) {
    CHECK(f.entries[e].lhs == o.entries[e].lhs);
    CHECK(f.entries[e].rhs == o.entries[e].rhs);
    CHECK(f.entries[e].value == o.entries[e].value);
  }
  CHECK(f.entries[0].lhs == std::vector<int>{0, 0});
  CHECK(f.entries[1].rhs == 1);
  CHECK(coeff_table_formula(p, 3).entries.size() == 16);
  CHECK_THROWS_AS(coeff_table_oracle(p, 1), Error);
}

TEST_CASE("idempotents") {
  auto s3 = sym(3);
  auto one = build_pair(s3, whole_group(s3));
  auto e = idempotents(one);
  REQUIRE(e.size() == 1);
  CHECK(e[0][0].real() == doctest::Approx(1.0 / 6));
  check_all_pass({check_idempotents(one)});

  auto p = preset("s2n-bn:2");
  CHECK(idempotents(p).size() == 2);
  check_all_pass({check_idempotents(p)});
  check_all_pass({check_idempotents(preset("s2n-bn:3"))});
}

TEST_CASE("full suite on presets") {
  for (const char* spec : {"s2n-bn:2", "s2n-bn:3", "sn-sn1:3", "sn-sn1:4", "gxgopp:S3"}) {
    INFO(spec);
    check_all_pass(verify_pair(preset(spec)));
  }
}

TEST_CASE("Gelfand pair with non-real characters") {
  // A_4 x A_4^opp: the diagonal pair is Gelfand for every group
  auto inst = parse_pair("gxgopp:" GELFAND_DATA_DIR "/a4.json");
  auto p = build_pair(inst.group, inst.K);
  CHECK(p.gelfand.gelfand);
  check_all_pass(verify_pair(p));
}
