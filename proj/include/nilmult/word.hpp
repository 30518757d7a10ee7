#pragma once

// Words in the free group on {a, b}.
//
// Grammar (whitespace is insignificant; '*' between factors is optional):
//
//   word    := factor*
//   factor  := atom ('^' integer)?
//   atom    := 'a' | 'b' | '1' | '(' word ')' | '[' word (',' word)+ ']'
//   integer := ['+'|'-'] digit+
//
// '1' is the empty word. Brackets nest to the left: [u,v,w] = [[u,v],w], and
// [u,v] = u^-1 v^-1 u v. Examples: "a^9 [a,b]^-3", "[a,b,b]", "(ab)^2".

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall.hpp"

#include <cctype>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nilmult {

enum class Gen { a, b };

struct Word {
  struct Commutator {
    std::vector<Word> args;  // at least two, left-normed
  };
  struct Group {
    std::vector<Word> body;  // exactly one
  };
  struct Factor {
    std::variant<Gen, Commutator, Group> base;
    Int exponent = 1;
  };

  std::vector<Factor> factors;

  bool empty() const { return factors.empty(); }

  static Word gen(Gen g, const Int& exp = 1) { return Word{{Factor{g, exp}}}; }
  static Word commutator(std::vector<Word> args, const Int& exp = 1) {
    return Word{{Factor{Commutator{std::move(args)}, exp}}};
  }

  Word& append(const Word& other) {
    factors.insert(factors.end(), other.factors.begin(), other.factors.end());
    return *this;
  }
};

inline std::string to_string(const Word& w);

namespace detail {

inline std::string factor_to_string(const Word::Factor& f) {
  std::string base;
  if (auto g = std::get_if<Gen>(&f.base)) {
    base = *g == Gen::a ? "a" : "b";
  } else if (auto c = std::get_if<Word::Commutator>(&f.base)) {
    base = "[";
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      if (i) base += ',';
      base += to_string(c->args[i]);
    }
    base += ']';
  } else {
    base = "(" + to_string(std::get<Word::Group>(f.base).body.front()) + ")";
  }
  if (f.exponent != 1) base += "^" + f.exponent.get_str();
  return base;
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Word word() {
    Word w;
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        continue;
      }
      if (ch == 'a' || ch == 'b' || ch == '(' || ch == '[' || ch == '1') {
        factor(w);
      } else {
        return w;
      }
    }
  }

  void factor(Word& w) {
    char ch = peek();
    bool identity = false;
    Word::Factor f;
    if (ch == 'a' || ch == 'b') {
      ++pos_;
      f.base = ch == 'a' ? Gen::a : Gen::b;
    } else if (ch == '1') {
      ++pos_;
      identity = true;
    } else if (ch == '(') {
      ++pos_;
      Word inner = word();
      expect(')');
      f.base = Word::Group{{std::move(inner)}};
    } else {
      ++pos_;
      Word::Commutator c;
      c.args.push_back(word());
      while (peek() == ',') {
        ++pos_;
        c.args.push_back(word());
      }
      expect(']');
      if (c.args.size() < 2) fail("commutator needs at least two entries");
      f.base = std::move(c);
    }
    if (peek() == '^') {
      ++pos_;
      f.exponent = integer();
    }
    if (!identity && f.exponent != 0) w.factors.push_back(std::move(f));
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer exponent");
    return parse_int(text_.substr(start, pos_ - start));
  }
};

}  // namespace detail

inline std::string to_string(const Word& w) {
  if (w.factors.empty()) return "1";
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += ' ';
    out += detail::factor_to_string(f);
  }
  return out;
}

inline Word parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

inline NfElement from_word(const Word& w) {
  NfElement r;
  for (const auto& f : w.factors) {
    NfElement base;
    if (auto g = std::get_if<Gen>(&f.base)) {
      base = NfElement::generator(*g == Gen::a ? kA : kB);
    } else if (auto c = std::get_if<Word::Commutator>(&f.base)) {
      base = from_word(c->args.front());
      for (std::size_t i = 1; i < c->args.size(); ++i) base = comm(base, from_word(c->args[i]));
    } else {
      base = from_word(std::get<Word::Group>(f.base).body.front());
    }
    r = mul(r, pow(base, f.exponent));
  }
  return r;
}

// A two-generator presentation: the prime it belongs to and its relators.
struct Presentation {
  Int p;
  std::vector<Word> relators;
};

// One relator per line; '#' starts a comment; blank lines are skipped.
inline std::vector<Word> parse_relators(std::istream& in) {
  std::vector<Word> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    try {
      out.push_back(parse_word(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace nilmult
