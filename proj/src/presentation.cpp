#include "cosetlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cosetlab/error.hpp"

namespace cosetlab {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::vector<std::string> names = {})
      : text_(text), names_(std::move(names)) {}

  Presentation presentation() {
    expect('<');
    Presentation p;
    skip_ws();
    if (peek() == '|')
      fail(ErrorCode::Parse, "empty generator list");
    while (true) {
      const auto [line, col] = position();
      std::string name = identifier();
      if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw ParseError(ErrorCode::Parse, "duplicate generator '" + name + "'",
                         line, col);
      names_.push_back(std::move(name));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect('|');
    skip_ws();
    if (peek() != '>') {
      while (true) {
        relation(p.relators);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorCode::Parse, "trailing characters after '>'");
    p.generator_names = names_;
    return p;
  }

  Word single_word() {
    Word w = product();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorCode::Parse, "trailing characters after word");
    return w;
  }

private:
  void relation(std::vector<Word> &out) {
    std::vector<Word> terms{product()};
    skip_ws();
    while (peek() == '=') {
      ++pos_;
      terms.push_back(product());
      skip_ws();
    }
    if (terms.size() == 1) {
      if (!terms[0].empty())
        out.push_back(terms[0]);
      return;
    }
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      Word r = terms[i] * terms[i + 1].inverse();
      if (!r.empty())
        out.push_back(std::move(r));
    }
  }

  Word product() {
    Word w = factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      w = w * factor();
      skip_ws();
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      base = base.power(integer());
    }
    return base;
  }

  Word atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = product();
      expect(')');
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    const auto [line, col] = position();
    const std::string name = identifier();
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      throw ParseError(ErrorCode::UndeclaredGenerator,
                       "undeclared generator '" + name + "'", line, col);
    return Word{Word::letter(static_cast<std::size_t>(it - names_.begin()))};
  }

  int integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(ErrorCode::Parse, "expected integer exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000)
        fail(ErrorCode::Parse, "exponent too large");
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  std::string identifier() {
    skip_ws();
    const char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      fail(ErrorCode::Parse, "expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(ErrorCode::Parse, std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(ErrorCode code, const std::string &msg) const {
    const auto [line, col] = position();
    throw ParseError(code, msg, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

} // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(std::string_view text,
                const std::vector<std::string> &generator_names) {
  return Parser(text, generator_names).single_word();
}

std::string to_string(const Presentation &p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i)
      out += ", ";
    out += p.generator_names[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(p.relators[i], p.generator_names);
  }
  out += " >";
  return out;
}

Presentation load_presentation_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

} // namespace cosetlab
