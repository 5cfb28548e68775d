#include "gelfand/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "gelfand/error.hpp"

namespace gelfand {

std::size_t default_cap() {
  if (const char* env = std::getenv("GELFAND_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error("permutation " + p.to_cycle_string() + " is not an element of the group");
  return it->second;
}

ElementId GroupTable::mul(ElementId a, ElementId b) const {
  if (!cayley_.empty())
    return cayley_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return index_.find(compose(element(a), element(b)))->second;
}

GroupPtr generate_group(int degree, const std::vector<Permutation>& generators, std::size_t cap,
                        std::string name) {
  if (cap < 1) throw Error("enumeration cap must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error("generator " + g.to_cycle_string() + " has degree " +
                  std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  auto table = std::make_shared<GroupTable>();
  table->degree_ = degree;
  table->name_ = std::move(name);

  auto& elems = table->elements_;
  auto& index = table->index_;
  elems.push_back(Permutation::identity(degree));
  index.emplace(elems.back(), 0);

  std::size_t layer_begin = 0;
  while (layer_begin < elems.size()) {
    std::size_t layer_end = elems.size();
    std::vector<Permutation> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : generators) {
        Permutation p = compose(s, elems[i]);
        if (index.contains(p)) continue;
        index.emplace(p, -1);
        next.push_back(std::move(p));
        if (index.size() > cap) throw EnumerationOverflow(index.size(), cap);
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& p : next) {
      index[p] = static_cast<ElementId>(elems.size());
      elems.push_back(std::move(p));
    }
    layer_begin = layer_end;
  }

  for (const auto& s : generators) table->generators_.push_back(index.at(s));

  const std::size_t n = elems.size();
  table->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) table->inverse_[i] = index.at(elems[i].inverse());

  if (n <= kCayleyTableLimit) {
    table->cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table->cayley_[a * n + b] = index.find(compose(elems[a], elems[b]))->second;
  }

  for (const auto& p : elems) table->exponent_ = std::lcm(table->exponent_, p.order());

  table->classes_ = conjugacy_classes(*table);
  return table;
}

ClassPartition conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  ClassPartition cp;
  cp.class_of.assign(n, -1);
  std::vector<ElementId> gen_inv;
  for (auto s : g.generators()) gen_inv.push_back(g.inverse(s));

  for (std::size_t start = 0; start < n; ++start) {
    if (cp.class_of[start] >= 0) continue;
    const int cls = static_cast<int>(cp.class_reps.size());
    cp.class_reps.push_back(static_cast<ElementId>(start));
    std::int64_t size = 0;
    std::deque<ElementId> queue{static_cast<ElementId>(start)};
    cp.class_of[start] = cls;
    while (!queue.empty()) {
      ElementId x = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t k = 0; k < gen_inv.size(); ++k) {
        ElementId y = g.mul(g.mul(g.generators()[k], x), gen_inv[k]);
        if (cp.class_of[static_cast<std::size_t>(y)] < 0) {
          cp.class_of[static_cast<std::size_t>(y)] = cls;
          queue.push_back(y);
        }
      }
    }
    cp.class_sizes.push_back(size);
  }

  // |C_g| = |G| / |Stab_g|
  for (std::size_t c = 0; c < cp.class_reps.size(); ++c) {
    ElementId r = cp.class_reps[c];
    std::int64_t stab = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto xi = static_cast<ElementId>(x);
      if (g.mul(xi, r) == g.mul(r, xi)) ++stab;
    }
    if (stab * cp.class_sizes[c] != static_cast<std::int64_t>(n))
      throw InternalError("class " + std::to_string(c) + " violates |C|*|Stab| = |G|");
  }
  return cp;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members,
                   std::vector<ElementId> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  mask_.assign(parent_->order(), 0);
  for (auto m : members_) mask_[static_cast<std::size_t>(m)] = 1;
}

Subgroup make_subgroup(GroupPtr parent, std::vector<ElementId> generators) {
  std::vector<char> seen(parent->order(), 0);
  std::vector<ElementId> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : generators) {
      ElementId y = parent->mul(s, members[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members), std::move(generators));
}

Subgroup make_subgroup(GroupPtr parent, const std::vector<Permutation>& generators) {
  std::vector<ElementId> ids;
  for (const auto& p : generators) ids.push_back(parent->id_of(p));
  return make_subgroup(std::move(parent), std::move(ids));
}

Subgroup whole_group(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  auto gens = parent->generators();
  return Subgroup(std::move(parent), std::move(all), std::move(gens));
}

DoubleCosetPartition double_cosets(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent()) throw Error("double_cosets: subgroups of different groups");
  const GroupTable& g = *h.parent();
  const std::size_t n = g.order();

  DoubleCosetPartition dc;
  dc.dc_of.assign(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (dc.dc_of[start] >= 0) continue;
    const int id = static_cast<int>(dc.reps.size());
    dc.reps.push_back(static_cast<ElementId>(start));
    std::vector<ElementId> queue{static_cast<ElementId>(start)};
    dc.dc_of[start] = id;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElementId x = queue[i];
      auto visit = [&](ElementId y) {
        if (dc.dc_of[static_cast<std::size_t>(y)] < 0) {
          dc.dc_of[static_cast<std::size_t>(y)] = id;
          queue.push_back(y);
        }
      };
      for (auto s : h.generators()) visit(g.mul(s, x));
      for (auto s : k.generators()) visit(g.mul(x, s));
    }
    dc.sizes.push_back(static_cast<std::int64_t>(queue.size()));
  }

  // |HgK| = |H||K| / |H ∩ gKg^-1|
  for (std::size_t c = 0; c < dc.reps.size(); ++c) {
    ElementId r = dc.reps[c];
    ElementId rinv = g.inverse(r);
    std::int64_t meet = 0;
    for (auto x : h.members())
      if (k.contains(g.mul(g.mul(rinv, x), r))) ++meet;
    auto expected = static_cast<std::int64_t>(h.order() * k.order()) / meet;
    if (expected * meet != static_cast<std::int64_t>(h.order() * k.order()) ||
        expected != dc.sizes[c])
      throw InternalError("double coset " + std::to_string(c) + " has size " +
                          std::to_string(dc.sizes[c]) + ", expected " + std::to_string(expected));
  }
  return dc;
}

ElementId ProductWithOpposite::encode(const Permutation& a, const Permutation& b) const {
  return group->id_of(direct_sum(a, b.inverse()));
}

std::pair<Permutation, Permutation> ProductWithOpposite::decode(ElementId id) const {
  auto img = group->element(id).images();
  std::vector<Permutation::point_type> left(img.begin(), img.begin() + block);
  std::vector<Permutation::point_type> right;
  for (auto it = img.begin() + block; it != img.end(); ++it)
    right.push_back(static_cast<Permutation::point_type>(*it - block));
  return {Permutation(std::move(left)), Permutation(std::move(right)).inverse()};
}

ProductWithOpposite product_with_opposite(const GroupPtr& g, std::size_t cap) {
  return product_with_opposite(g, whole_group(g), cap);
}

ProductWithOpposite product_with_opposite(const GroupPtr& gp, const Subgroup& h,
                                          std::size_t cap) {
  if (h.parent() != gp) throw Error("product_with_opposite: H is not a subgroup of G");
  const GroupTable& g = *gp;
  ProductWithOpposite out;
  out.block = g.degree();
  const auto id = Permutation::identity(g.degree());
  std::vector<Permutation> gens;
  for (auto s : g.generators()) gens.push_back(direct_sum(g.element(s), id));
  for (auto s : h.generators()) gens.push_back(direct_sum(id, g.element(s)));
  if (g.order() * h.order() > cap) throw EnumerationOverflow(g.order() * h.order(), cap);
  out.group = generate_group(2 * g.degree(), gens, cap,
                             g.name().empty() ? std::string{} : g.name() + "xopp");
  std::vector<Permutation> diag;
  for (auto s : h.generators()) diag.push_back(direct_sum(g.element(s), g.element(s)));
  out.diagonal = make_subgroup(out.group, diag);
  return out;
}

}  // namespace gelfand
