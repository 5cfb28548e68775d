#include "gelfand/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "gelfand/error.hpp"

namespace gelfand {

Permutation::Permutation(std::vector<point_type> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw ParseError("image array is not a bijection on " + std::to_string(images_.size()) +
                       " points");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  std::iota(p.images_.begin(), p.images_.end(), point_type{0});
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<point_type>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::int64_t Permutation::order() const {
  std::int64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::int64_t>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  std::vector<Permutation::point_type> img(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) img[x] = static_cast<Permutation::point_type>(p[q[x]]);
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 0) throw ParseError("negative degree");
  std::vector<Permutation::point_type> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), Permutation::point_type{0});
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto token_at = [&](std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
           text[end] != '(' && text[end] != ')')
      ++end;
    return std::string(text.substr(pos, std::max<std::size_t>(end - pos, 1)));
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at token '" + token_at(i) + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle, missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected token '" + token_at(i) + "'");
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string tok(text.substr(start, i - start));
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad point '" + tok + "'");
      if (value < 1 || value > degree)
        throw ParseError("point '" + tok + "' out of range 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(value - 1)])
        throw ParseError("repeated point '" + tok + "'");
      used[static_cast<std::size_t>(value - 1)] = true;
      cyc.push_back(static_cast<int>(value - 1));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = static_cast<Permutation::point_type>(cyc[(k + 1) % cyc.size()]);
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<Permutation::point_type> img;
  img.reserve(static_cast<std::size_t>(p.degree() + q.degree()));
  for (auto x : p.images()) img.push_back(x);
  for (auto x : q.images()) img.push_back(static_cast<Permutation::point_type>(x + p.degree()));
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace gelfand
