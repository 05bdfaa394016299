#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cosetlab {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}, acting on the right: x^(p*q) = (x^p)^q.
class Permutation {
public:
  Permutation() = default;
  /// Throws Error(InvalidArgument) when `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Cycles of length >= 2 ordered by smallest point, each starting there.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

/// Conjugate g^-1 * p * g.
Permutation conjugate(const Permutation &p, const Permutation &g);

/// xy == yx.
bool commutes(const Permutation &x, const Permutation &y);

/// 1-based cycle notation, `()` for the identity.
std::string to_string(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace cosetlab
