#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cosetlab {

/// A freely reduced word in a free group.
///
/// Letters are signed generator indices: generator `g` (0-based) is stored as
/// `g + 1` and its inverse as `-(g + 1)`. The empty word is the identity.
class Word {
public:
  Word() = default;
  /// Builds a word from arbitrary letters, freely reducing them.
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters);

  static constexpr int letter(std::size_t generator, bool inverse = false) {
    const int l = static_cast<int>(generator) + 1;
    return inverse ? -l : l;
  }
  static constexpr std::size_t generator_of(int letter) {
    return static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
  }

  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(int exponent) const;
  /// Largest generator index used plus one (0 for the identity).
  std::size_t generator_span() const;
  /// Exponent sum of one generator.
  int exponent_sum(std::size_t generator) const;

  friend Word operator*(const Word &u, const Word &v);
  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  std::vector<int> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<int> free_reduce(std::span<const int> letters);

/// Freely reduced concatenation.
Word word_multiply(const Word &u, const Word &v);

/// Cyclically reduced form (free reduction plus cancellation across the ends).
Word cyclically_reduce(const Word &w);

/// Renders a word with the given generator names, e.g. `a^2*b^-1`; `1` for the
/// identity.
std::string to_string(const Word &w, std::span<const std::string> names);

} // namespace cosetlab
