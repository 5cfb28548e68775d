#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/perm.hpp"

namespace gelfand {

// An integer partition; parts are kept weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts and drops zeros; throws Error on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  // sum of parts
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // (2λ_1, 2λ_2, ...)
  Partition doubled() const;
  Partition conjugate() const;

  // "[3,2,1]"
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n in reverse-lexicographic order; p(0) = {()}.
std::vector<Partition> partitions_of(int n);

struct PartitionStats {
  std::int64_t z = 1;             // Π i^{m_i} m_i!
  std::int64_t hook_product = 1;  // Π hook lengths
  std::int64_t dim = 1;           // n! / hook_product
};

PartitionStats partition_stats(const Partition& lambda);

std::int64_t factorial(int n);

// χ^λ(μ) by the Murnaghan–Nakayama rule (rim hooks of length μ_1 first).
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Cycle lengths of p, including fixed points.
Partition cycle_type(const Permutation& p);

// Coset type of p ∈ S_2n with respect to the matching {1,2},{3,4},...
// Traces i -> p(i) -> bar(p(i)) -> p^-1(bar(p(i))) -> ... back to i and
// halves the chain lengths.
Partition coset_type(const Permutation& p);

struct PairLabel {
  int i = 1;         // length of the cycle through point 1
  Partition lambda;  // cycle type of the remaining cycles, a partition of n - i

  std::string to_string() const;
  auto operator<=>(const PairLabel&) const = default;
};

// Label of x ∈ S_n.
PairLabel pair_label(const Permutation& x);

// S_{n-1} acting on {2..n} inside S_n: b(k) is moved to point k+1.
Permutation embed_fixing_first(const Permutation& b);

// Label of the double coset of (a, b) ∈ S_n × S_{n-1}^opp: computed from
// x = a·b with b embedded by embed_fixing_first.
PairLabel sn_sn1_label(const Permutation& a, const Permutation& b);

// All labels (i, λ) for S_n, ordered by i then λ reverse-lexicographically.
std::vector<PairLabel> pair_labels_of(int n);

}  // namespace gelfand
