#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gelfand/perm.hpp"

namespace gelfand {

using ElementId = std::int32_t;

inline constexpr std::size_t kDefaultCap = 2'000'000;

// Groups at most this large get a precomputed multiplication table.
inline constexpr std::size_t kCayleyTableLimit = 1024;

// Reads GELFAND_CAP from the environment, falling back to kDefaultCap.
std::size_t default_cap();

struct ClassPartition {
  std::vector<int> class_of;             // element id -> class id
  std::vector<ElementId> class_reps;     // class id -> minimal element id
  std::vector<std::int64_t> class_sizes;
};

// A fully enumerated permutation group.
//
// Element 0 is the identity; elements are ordered by BFS layer from the
// identity under left multiplication by the generators, ties broken by the
// image array.  Conjugacy classes are numbered by their minimal element id,
// so class 0 is {identity}.  Immutable after construction.
class GroupTable {
 public:
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }

  const Permutation& element(ElementId id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }

  std::optional<ElementId> find(const Permutation& p) const;
  // Throws Error if p is not an element.
  ElementId id_of(const Permutation& p) const;

  ElementId inverse(ElementId id) const { return inverse_[static_cast<std::size_t>(id)]; }
  // Id of element(a) * element(b) (b applied first).
  ElementId mul(ElementId a, ElementId b) const;

  std::size_t class_count() const { return classes_.class_reps.size(); }
  int class_of(ElementId id) const { return classes_.class_of[static_cast<std::size_t>(id)]; }
  ElementId class_rep(int c) const { return classes_.class_reps[static_cast<std::size_t>(c)]; }
  std::int64_t class_size(int c) const { return classes_.class_sizes[static_cast<std::size_t>(c)]; }
  const ClassPartition& classes() const { return classes_; }
  // Class of the inverses of class c.
  int inverse_class(int c) const { return class_of(inverse(class_rep(c))); }

  // Least common multiple of element orders.
  std::int64_t exponent() const { return exponent_; }

 private:
  friend std::shared_ptr<const GroupTable> generate_group(int, const std::vector<Permutation>&,
                                                          std::size_t, std::string);

  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> cayley_;  // row-major, empty when order > kCayleyTableLimit
  ClassPartition classes_;
  std::int64_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Enumerates the group generated by `generators`.  Throws
// EnumerationOverflow if the closure exceeds `cap` elements.
GroupPtr generate_group(int degree, const std::vector<Permutation>& generators,
                        std::size_t cap = default_cap(), std::string name = {});

// Orbits of conjugation by the generators; checks |C| * |Stab(rep)| = |G|.
ClassPartition conjugacy_classes(const GroupTable& g);

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<ElementId> members, std::vector<ElementId> generators);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<ElementId>& members() const { return members_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  bool contains(ElementId id) const { return mask_[static_cast<std::size_t>(id)] != 0; }

 private:
  GroupPtr parent_;
  std::vector<ElementId> members_;  // sorted
  std::vector<char> mask_;
  std::vector<ElementId> generators_;
};

// Closure of the given elements inside `parent`.
Subgroup make_subgroup(GroupPtr parent, std::vector<ElementId> generators);
// Throws Error if some generator is not an element of parent.
Subgroup make_subgroup(GroupPtr parent, const std::vector<Permutation>& generators);
Subgroup whole_group(GroupPtr parent);

struct DoubleCosetPartition {
  std::vector<int> dc_of;         // element id -> coset id
  std::vector<ElementId> reps;    // coset id -> minimal element id
  std::vector<std::int64_t> sizes;

  std::size_t count() const { return reps.size(); }
};

// Partition of G into double cosets H g K.  Cosets are numbered by their
// minimal element, so coset 0 contains the identity.  Each size is checked
// against |H||K| / |H ∩ gKg^-1|.
DoubleCosetPartition double_cosets(const Subgroup& h, const Subgroup& k);

// G x H^opp with law (a,b)(c,d) = (ac, db), H a subgroup of G.
//
// The pair (a,b) is stored as the permutation a ⊕ b^-1 on 2·degree points,
// which turns the opposite law into an ordinary direct product.
struct ProductWithOpposite {
  GroupPtr group;
  Subgroup diagonal;  // {(x, x^-1) : x in H}
  int block = 0;      // degree of G

  ElementId encode(const Permutation& a, const Permutation& b) const;
  std::pair<Permutation, Permutation> decode(ElementId id) const;
};

ProductWithOpposite product_with_opposite(const GroupPtr& g, std::size_t cap = default_cap());
ProductWithOpposite product_with_opposite(const GroupPtr& g, const Subgroup& h,
                                          std::size_t cap = default_cap());

}  // namespace gelfand
