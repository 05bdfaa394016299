#include "cosetlab/permutation.hpp"

#include <numeric>

#include "cosetlab/error.hpp"

namespace cosetlab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidArgument, "images do not form a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation
Permutation::from_cycles(std::size_t degree,
                         const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      images.at(c[i]) = c[(i + 1) % c.size()];
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

std::vector<std::vector<Point>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point s = 0; s < images_.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<Point> c;
    for (Point x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    if (c.size() > 1 || include_fixed)
      out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto &c : cycles())
    ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  // x^(g^-1 p g): maps x^g to (x^p)^g.
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    images[g(x)] = g(p(x));
  return Permutation(std::move(images));
}

bool commutes(const Permutation &x, const Permutation &y) {
  for (Point i = 0; i < x.degree(); ++i)
    if (y(x(i)) != x(y(i)))
      return false;
  return true;
}

std::string to_string(const Permutation &p) {
  const auto cs = p.cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace cosetlab
