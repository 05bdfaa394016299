#include <doctest.h>

#include <random>

#include "cosetlab/error.hpp"
#include "cosetlab/presentation.hpp"

using namespace cosetlab;

TEST_CASE("words reduce freely and invert") {
  const Word w{1, 2, -2, -1, 1};
  CHECK(w == Word{1});
  const Word u{1, 2, -1};
  CHECK((u * u.inverse()).empty());
  CHECK(u.power(3) == Word{1, 2, 2, 2, -1});
  CHECK(u.power(-1) == u.inverse());
  CHECK(cyclically_reduce(Word{-1, 2, 1}) == Word{2});
  CHECK(Word{1, 1, -2}.exponent_sum(0) == 2);
}

TEST_CASE("parse and print presentations") {
  const auto p = parse_presentation("< a, b | a^2, (a*b)^3 = b^-1 >");
  REQUIRE(p.generator_count() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == Word{1, 1});
  CHECK(parse_presentation(to_string(p)) == p);

  const std::vector<std::string> names{"a", "b"};
  CHECK(to_string(parse_word("a*b^-2", names), names) == "a*b^-2");
  CHECK(to_string(Word{}, names) == "1");
}

TEST_CASE("equation chains yield one relator per equals sign") {
  const auto p = parse_presentation("< x, y | x*y*x = y*x*y = 1 >");
  CHECK(p.relators.size() == 2);
  // x = x contributes nothing
  CHECK(parse_presentation("< x | x = x >").relators.empty());
}

TEST_CASE("parse errors carry codes and positions") {
  try {
    parse_presentation("< a | a*c >");
    FAIL("expected an error");
  } catch (const ParseError &e) {
    CHECK(e.code() == ErrorCode::UndeclaredGenerator);
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_presentation("< a | a^ >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | a"), ParseError);
}

TEST_CASE("catalog entries resolve and round-trip") {
  for (const auto &name : catalog_names()) {
    const auto &e = catalog_lookup(name);
    CHECK(e.name == name);
    CHECK(parse_presentation(to_string(e.presentation)) == e.presentation);
    CHECK(resolve_group(name) == e.presentation);
  }
  try {
    resolve_group("no-such-group");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::UnknownGroup);
  }
}

TEST_CASE("printing round-trips random presentations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p;
    p.generator_names = {"a", "b", "c"};
    const int nrel = 1 + static_cast<int>(rng() % 3);
    for (int r = 0; r < nrel; ++r) {
      std::vector<int> letters;
      const int len = 1 + static_cast<int>(rng() % 8);
      for (int i = 0; i < len; ++i) {
        const int g = 1 + static_cast<int>(rng() % 3);
        letters.push_back(rng() % 2 ? g : -g);
      }
      Word w(letters);
      if (!w.empty())
        p.relators.push_back(w);
    }
    CHECK(parse_presentation(to_string(p)) == p);
  }
}
