#include <set>

#include "doctest.h"
#include "gelfand/error.hpp"
#include "gelfand/partition.hpp"
#include "helpers.hpp"

using namespace gelfand;
using testing::cyc;
using P = Partition;

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0) == std::vector<P>{P()});
  CHECK(partitions_of(3) == std::vector<P>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(10).size() == 42);
  CHECK_THROWS_AS(partitions_of(-1), Error);
}

TEST_CASE("partition basics") {
  P p({1, 3, 0, 2});
  CHECK(p.parts() == std::vector<int>{3, 2, 1});
  CHECK(p.size() == 6);
  CHECK(p.to_string() == "[3,2,1]");
  CHECK(p.doubled() == P({6, 4, 2}));
  CHECK(P({4, 1}).conjugate() == P({2, 1, 1, 1}));
  CHECK(P().to_string() == "[]");
  CHECK_THROWS_AS(P({2, -1}), Error);
}

TEST_CASE("partition_stats") {
  for (int n = 1; n <= 6; ++n) {
    auto s = partition_stats(P(std::vector<int>(static_cast<std::size_t>(n), 1)));
    CHECK(s.z == factorial(n));
    CHECK(s.dim == 1);
  }
  auto s21 = partition_stats(P({2, 1}));
  CHECK(s21.z == 2);
  CHECK(s21.hook_product == 3);
  CHECK(s21.dim == 2);
  auto s22 = partition_stats(P({2, 2}));
  CHECK(s22.hook_product == 12);
  CHECK(s22.dim == 2);
  CHECK(partition_stats(P({4, 2})).hook_product == 80);
  // Σ dim² = n!, Σ n!/z = n!
  for (int n = 1; n <= 7; ++n) {
    std::int64_t d2 = 0, cls = 0;
    for (const auto& l : partitions_of(n)) {
      auto s = partition_stats(l);
      d2 += s.dim * s.dim;
      cls += factorial(n) / s.z;
    }
    CHECK(d2 == factorial(n));
    CHECK(cls == factorial(n));
  }
}

TEST_CASE("Murnaghan-Nakayama") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      CHECK(mn_character(P({n}), mu) == 1);
      const int sign = (n - static_cast<int>(mu.length())) % 2 ? -1 : 1;
      CHECK(mn_character(P(std::vector<int>(static_cast<std::size_t>(n), 1)), mu) == sign);
    }
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(mn_character(P({3, 2, 1}), P({1, 1, 1, 1, 1, 1})) == 16);
  CHECK(mn_character(P({2, 2}), P({2, 2})) == 2);
  CHECK_THROWS_AS(mn_character(P({2}), P({1})), Error);
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      CHECK(mn_character(l, P(std::vector<int>(static_cast<std::size_t>(n), 1))) == partition_stats(l).dim);
}

TEST_CASE("Murnaghan-Nakayama rows are orthonormal") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        // Σ_μ χ^a(μ) χ^b(μ) n!/z_μ = n! δ_ab
        std::int64_t s = 0;
        for (const auto& mu : parts) s += mn_character(a, mu) * mn_character(b, mu) * (factorial(n) / partition_stats(mu).z);
        CHECK(s == (a == b ? factorial(n) : 0));
      }
  }
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(cyc("(1 2 3)(4 5)", 7)) == P({3, 2, 1, 1}));
  CHECK(cycle_type(Permutation::identity(3)) == P({1, 1, 1}));
}

TEST_CASE("coset_type") {
  for (int n = 1; n <= 5; ++n)
    CHECK(coset_type(Permutation::identity(2 * n)) == P(std::vector<int>(static_cast<std::size_t>(n), 1)));
  CHECK(coset_type(testing::twelve_point_t()) == P({3, 2, 1}));
  CHECK(coset_type(cyc("(1 2)(3 4)(5 6)(7 8)", 8)) == P({1, 1, 1, 1}));
  CHECK(coset_type(cyc("(2 3)", 4)) == P({2}));
  CHECK_THROWS_AS(coset_type(Permutation::identity(3)), Error);
}

TEST_CASE("coset_type is constant on B_n double cosets") {
  for (int n : {2, 3}) {
    auto g = testing::sym(2 * n);
    auto b = hyperoctahedral(g);
    auto dc = double_cosets(b, b);
    std::set<Partition> types;
    for (std::size_t c = 0; c < dc.count(); ++c) types.insert(coset_type(g->element(dc.reps[c])));
    CHECK(types.size() == partitions_of(n).size());
    CHECK(dc.count() == partitions_of(n).size());
    for (std::size_t x = 0; x < g->order(); ++x)
      CHECK(coset_type(g->element(static_cast<ElementId>(x))) ==
            coset_type(g->element(dc.reps[static_cast<std::size_t>(dc.dc_of[x])])));
  }
}

TEST_CASE("pair labels") {
  auto l = sn_sn1_label(Permutation::identity(4), Permutation::identity(3));
  CHECK(l.i == 1);
  CHECK(l.lambda == P({1, 1, 1}));
  CHECK(pair_label(cyc("(1 2 3)", 3)).i == 3);
  CHECK(pair_label(cyc("(1 2 3)", 3)).lambda == P());
  auto x = pair_label(cyc("(1 2)(3 4)", 4));
  CHECK(x.i == 2);
  CHECK(x.lambda == P({2}));
  CHECK(x.to_string() == "(2,[2])");
  // b acts on {2..n}
  CHECK(embed_fixing_first(cyc("(1 2)", 3)) == cyc("(2 3)", 4));
  CHECK(sn_sn1_label(cyc("(1 2)", 4), cyc("(1 2)", 3)) == PairLabel{3, P({1})});
  CHECK_THROWS_AS(sn_sn1_label(Permutation::identity(4), Permutation::identity(2)), Error);
  CHECK(pair_labels_of(4).size() == 7);
  CHECK(pair_labels_of(5).size() == 12);
}
