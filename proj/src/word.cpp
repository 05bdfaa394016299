#include "cosetlab/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "cosetlab/error.hpp"

namespace cosetlab {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::Parse:
    return "parse";
  case ErrorCode::UndeclaredGenerator:
    return "undeclared-generator";
  case ErrorCode::UnknownGroup:
    return "unknown-group";
  case ErrorCode::Overflow:
    return "overflow";
  case ErrorCode::BudgetExceeded:
    return "budget-exceeded";
  case ErrorCode::NotTransitive:
    return "not-transitive";
  case ErrorCode::InvalidArgument:
    return "invalid-argument";
  case ErrorCode::Io:
    return "io";
  }
  return "unknown";
}

ParseError::ParseError(ErrorCode code, const std::string &msg,
                       std::size_t line, std::size_t column)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      msg),
      line_(line), column_(column) {}

std::vector<int> free_reduce(std::span<const int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0)
      throw Error(ErrorCode::InvalidArgument, "word letter 0 is not valid");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(std::vector<int> letters) : letters_(free_reduce(letters)) {}

Word::Word(std::initializer_list<int> letters)
    : letters_(free_reduce(std::span<const int>(letters.begin(), letters.size()))) {}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word Word::power(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  std::vector<int> letters;
  for (int i = 0; i < std::abs(exponent); ++i)
    letters.insert(letters.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(letters));
}

std::size_t Word::generator_span() const {
  std::size_t span = 0;
  for (int l : letters_)
    span = std::max(span, generator_of(l) + 1);
  return span;
}

int Word::exponent_sum(std::size_t generator) const {
  int sum = 0;
  for (int l : letters_)
    if (generator_of(l) == generator)
      sum += l > 0 ? 1 : -1;
  return sum;
}

Word operator*(const Word &u, const Word &v) {
  // Only the junction can cancel; both operands are already reduced.
  std::size_t k = 0;
  while (k < u.size() && k < v.size() &&
         u.letters_[u.size() - 1 - k] == -v.letters_[k])
    ++k;
  Word w;
  w.letters_.reserve(u.size() + v.size() - 2 * k);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(),
                    u.letters_.end() - static_cast<std::ptrdiff_t>(k));
  w.letters_.insert(w.letters_.end(),
                    v.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                    v.letters_.end());
  return w;
}

Word word_multiply(const Word &u, const Word &v) { return u * v; }

Word cyclically_reduce(const Word &w) {
  auto letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<int>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                               letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::string to_string(const Word &w, std::span<const std::string> names) {
  if (w.empty())
    return "1";
  std::string out;
  auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    const auto gen = Word::generator_of(letters[i]);
    const std::string name =
        gen < names.size() ? names[gen] : "g" + std::to_string(gen + 1);
    int run = static_cast<int>(j - i);
    if (letters[i] < 0)
      run = -run;
    if (!out.empty())
      out += '*';
    out += name;
    if (run != 1)
      out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

} // namespace cosetlab
