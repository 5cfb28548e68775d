#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gelfand {

// A permutation of {0, ..., degree-1} stored as its image array.
//
// Composition applies the right operand first: compose(p, q)(x) = p(q(x)).
// Every module uses this convention.
class Permutation {
 public:
  using point_type = std::uint16_t;

  Permutation() = default;

  // Throws ParseError unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<point_type> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const point_type> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  // Least m >= 1 with p^m = id.
  std::int64_t order() const;

  // Nontrivial cycles, 0-based, each starting at its smallest point,
  // ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  // 1-based disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<point_type> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation direct_sum(const Permutation& p, const Permutation& q);

  std::vector<point_type> images_;
};

// x -> p(q(x)).  Throws Error on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

// Parses 1-based disjoint-cycle notation such as "(1 6 7)(2 3)".
// Points absent from the text are fixed.
Permutation parse_cycles(std::string_view text, int degree);

// p acting on the first p.degree() points, q on the next q.degree() points.
Permutation direct_sum(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace gelfand

template <>
struct std::hash<gelfand::Permutation> : gelfand::PermutationHash {};
