#include "gelfand/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gelfand/error.hpp"

namespace gelfand {

Partition::Partition(std::vector<int> parts) {
  for (int x : parts) {
    if (x < 0) throw Error("partition parts must be nonnegative");
    if (x > 0) parts_.push_back(x);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::doubled() const {
  std::vector<int> p = parts_;
  for (auto& x : p) x *= 2;
  return Partition(std::move(p));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

PartitionStats partition_stats(const Partition& lambda) {
  PartitionStats s;
  std::map<int, int> mult;
  for (int x : lambda.parts()) ++mult[x];
  for (auto [part, m] : mult) {
    for (int j = 0; j < m; ++j) s.z *= part;
    s.z *= factorial(m);
  }
  const Partition conj = lambda.conjugate();
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      // arm + leg + 1
      int arm = lambda[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      s.hook_product *= arm + leg + 1;
    }
  s.dim = factorial(lambda.size()) / s.hook_product;
  return s;
}

namespace {

std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;

  thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[0];
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int moved = b - r;
    if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
    // Removing an r-rim-hook; its leg length is the number of beads jumped.
    int jumped = 0;
    for (int x : beta)
      if (x > moved && x < b) ++jumped;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = moved;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    total += (jumped % 2 ? -1 : 1) * mn_rec(smaller, rest);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error("mn_character: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  return mn_rec(lambda.parts(), mu.parts());
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p[x]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Partition coset_type(const Permutation& p) {
  const int deg = p.degree();
  if (deg % 2 != 0) throw Error("coset_type: odd degree " + std::to_string(deg));
  const Permutation pinv = p.inverse();
  auto bar = [](int x) { return x ^ 1; };  // 0-based partner in {2k-1, 2k}

  std::vector<bool> used(static_cast<std::size_t>(deg), false);  // edges x -> p(x)
  std::vector<int> halves;
  for (int start = 0; start < deg; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    int pos = start;
    bool forward = true;
    int steps = 0;
    do {
      if (forward) {
        used[static_cast<std::size_t>(pos)] = true;
        pos = bar(p[pos]);
      } else {
        int from = pinv[pos];
        used[static_cast<std::size_t>(from)] = true;
        pos = bar(from);
      }
      forward = !forward;
      ++steps;
    } while (!(pos == start && forward));
    halves.push_back(steps / 2);
  }
  return Partition(std::move(halves));
}

std::string PairLabel::to_string() const {
  return "(" + std::to_string(i) + "," + lambda.to_string() + ")";
}

PairLabel pair_label(const Permutation& x) {
  PairLabel label;
  std::vector<bool> in_first(static_cast<std::size_t>(x.degree()), false);
  int len = 0;
  for (int y = 0; !in_first[static_cast<std::size_t>(y)]; y = x[y]) {
    in_first[static_cast<std::size_t>(y)] = true;
    ++len;
  }
  label.i = len;
  std::vector<int> lengths;
  std::vector<bool> seen = in_first;
  for (int s = 0; s < x.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int l = 0;
    for (int y = s; !seen[static_cast<std::size_t>(y)]; y = x[y]) {
      seen[static_cast<std::size_t>(y)] = true;
      ++l;
    }
    lengths.push_back(l);
  }
  label.lambda = Partition(std::move(lengths));
  return label;
}

Permutation embed_fixing_first(const Permutation& b) {
  std::vector<Permutation::point_type> img{0};
  for (auto x : b.images()) img.push_back(static_cast<Permutation::point_type>(x + 1));
  return Permutation(std::move(img));
}

PairLabel sn_sn1_label(const Permutation& a, const Permutation& b) {
  if (b.degree() + 1 != a.degree())
    throw Error("sn_sn1_label: expected degrees n and n-1, got " + std::to_string(a.degree()) +
                " and " + std::to_string(b.degree()));
  return pair_label(compose(a, embed_fixing_first(b)));
}

std::vector<PairLabel> pair_labels_of(int n) {
  std::vector<PairLabel> out;
  for (int i = 1; i <= n; ++i)
    for (auto& lambda : partitions_of(n - i)) out.push_back(PairLabel{i, lambda});
  return out;
}

}  // namespace gelfand
