// The free noncommutative algebra Z<g0, g1, ...>: finite BigInt-linear
// combinations of words in noncommuting generators, multiplied by word
// concatenation. An identity holds here iff it holds in every ring, which
// makes this the oracle ring for the general verifications.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commat/bigint.hpp"
#include "commat/detail/term_format.hpp"
#include "commat/errors.hpp"

namespace commat {

class FreeAlgElem {
public:
  // A word is a sequence of generator indices; the empty word is 1.
  using Word = std::vector<unsigned char>;

  // Degree first, then reversed lexicographic; reverse iteration of the map
  // therefore yields (degree descending, lex ascending), which is the
  // canonical print order.
  struct WordOrder {
    bool operator()(const Word& u, const Word& v) const {
      if (u.size() != v.size()) return u.size() < v.size();
      return std::lexicographical_compare(v.begin(), v.end(), u.begin(), u.end());
    }
  };

  using TermMap = std::map<Word, BigInt, WordOrder>;

  FreeAlgElem() = default;

  static FreeAlgElem zero() { return FreeAlgElem(); }
  static FreeAlgElem one() { return term(BigInt::one(), {}); }
  static FreeAlgElem from_int(const BigInt& n) { return term(n, {}); }
  static FreeAlgElem generator(unsigned index) {
    return term(BigInt::one(), {static_cast<unsigned char>(index)});
  }

  static FreeAlgElem term(BigInt c, Word w) {
    FreeAlgElem e;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  friend FreeAlgElem operator+(const FreeAlgElem& a, const FreeAlgElem& b) {
    FreeAlgElem r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend FreeAlgElem operator-(const FreeAlgElem& a, const FreeAlgElem& b) {
    FreeAlgElem r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }

  FreeAlgElem operator-() const {
    FreeAlgElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  // Bilinear extension of word concatenation.
  friend FreeAlgElem operator*(const FreeAlgElem& a, const FreeAlgElem& b) {
    FreeAlgElem r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), ca * cb);
      }
    return r;
  }

  friend bool operator==(const FreeAlgElem& a, const FreeAlgElem& b) {
    return a.terms_ == b.terms_;
  }

  // e.g. "a*a*b - 2*a*b*a + b*a*a". Generators beyond 'z' print as g<i>.
  std::string str() const {
    std::vector<std::pair<BigInt, std::string>> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (std::size_t k = 0; k < it->first.size(); ++k) {
        if (k) mono += "*";
        mono += generator_name(it->first[k]);
      }
      out.emplace_back(it->second, mono);
    }
    return detail::join_terms(out);
  }

  static std::string generator_name(unsigned index) {
    if (index < 26) return std::string(1, static_cast<char>('a' + index));
    return "g" + std::to_string(index);
  }

private:
  void add_term(Word w, BigInt c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(std::move(w), std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TermMap terms_;
};

namespace detail {

// Recursive-descent parser for free-algebra expressions:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | letter | '(' expr ')' , optionally followed by ^n
// Letters a..z denote generators 0..25.
class FreeExprParser {
public:
  explicit FreeExprParser(std::string_view src) : src_(src) {}

  FreeAlgElem parse() {
    FreeAlgElem e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return e;
  }

private:
  FreeAlgElem expr() {
    skip_ws();
    bool neg = accept('-');
    FreeAlgElem acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  FreeAlgElem term() {
    FreeAlgElem acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) acc = acc * factor();
      else return acc;
    }
  }

  FreeAlgElem factor() {
    skip_ws();
    FreeAlgElem base;
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      if (!accept(')')) fail("missing ')'");
    } else if (c >= 'a' && c <= 'z') {
      ++pos_;
      base = FreeAlgElem::generator(static_cast<unsigned>(c - 'a'));
    } else if (c >= '0' && c <= '9') {
      std::string digits;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
        digits += src_[pos_++];
      base = FreeAlgElem::from_int(BigInt(digits));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::string digits;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
        digits += src_[pos_++];
      if (digits.empty()) fail("missing exponent");
      unsigned long p = std::stoul(digits);
      FreeAlgElem acc = FreeAlgElem::one();
      for (unsigned long i = 0; i < p; ++i) acc = acc * base;
      base = acc;
    }
    return base;
  }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw config_error("free-algebra expression: " + what + " at offset " +
                       std::to_string(pos_) + " in \"" + std::string(src_) + "\"");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline FreeAlgElem parse_free_expr(std::string_view src) {
  return detail::FreeExprParser(src).parse();
}

} // namespace commat
