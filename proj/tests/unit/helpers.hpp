#pragma once

#include <string>
#include <vector>

#include "gelfand/group.hpp"
#include "gelfand/perm.hpp"
#include "gelfand/presets.hpp"

namespace testing {

inline gelfand::Permutation cyc(const std::string& text, int degree) {
  return gelfand::parse_cycles(text, degree);
}

// 1-based image list.
inline std::vector<int> images1(const gelfand::Permutation& p) {
  std::vector<int> v;
  for (auto x : p.images()) v.push_back(x + 1);
  return v;
}

inline gelfand::Permutation from_images1(std::vector<int> img) {
  std::vector<gelfand::Permutation::point_type> v;
  for (int x : img) v.push_back(static_cast<gelfand::Permutation::point_type>(x - 1));
  return gelfand::Permutation(std::move(v));
}

inline gelfand::GroupPtr sym(int n) { return gelfand::symmetric_group(n); }

inline std::vector<std::int64_t> sorted_sizes(const gelfand::GroupTable& g) {
  std::vector<std::int64_t> s;
  for (std::size_t c = 0; c < g.class_count(); ++c) s.push_back(g.class_size(static_cast<int>(c)));
  return s;
}

// The twelve-point permutation with coset type (3,2,1).
inline gelfand::Permutation twelve_point_t() {
  return from_images1({8, 12, 4, 6, 10, 9, 11, 1, 7, 2, 3, 5});
}

}  // namespace testing
