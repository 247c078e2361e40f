#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jwrep/errors.hpp"

namespace jwrep {

/// One generator sigma_index^exponent, exponent in {+1, -1}.
struct Letter {
  int index = 1;
  int exponent = 1;

  /// Signed form used by the text syntax: +i or -i.
  int signed_index() const { return index * exponent; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Shortlex position of a letter: 1, -1, 2, -2, ...
inline int letter_rank(const Letter& l) { return 2 * (l.index - 1) + (l.exponent > 0 ? 0 : 1); }

class BraidWord {
public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw DomainError("braid needs at least one strand");
    for (const auto& l : letters_) {
      if (l.index < 1 || l.index >= strands_)
        throw DomainError("generator index " + std::to_string(l.index) + " out of range for B_" +
                          std::to_string(strands_));
      if (l.exponent != 1 && l.exponent != -1)
        throw DomainError("generator exponent must be +1 or -1");
    }
  }

  /// Parses whitespace-separated signed integers: "1 -2 1" is s1 s2^-1 s1.
  static BraidWord parse(int strands, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("bad braid letter '" + tok + "'");
      }
      if (used != tok.size() || v == 0)
        throw DomainError("bad braid letter '" + tok + "'");
      letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
  }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int exponent_sum() const {
    int e = 0;
    for (const auto& l : letters_)
      e += l.exponent;
    return e;
  }

  BraidWord inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv)
      l.exponent = -l.exponent;
    return BraidWord(strands_, std::move(inv));
  }

  /// Same letters viewed in B_m, m >= strands.
  BraidWord widen(int m) const {
    if (m < strands_)
      throw DomainError("cannot narrow a braid");
    return BraidWord(m, letters_);
  }

  BraidWord then(const BraidWord& other) const {
    if (other.strands_ != strands_)
      throw DomainError("strand mismatch in braid product");
    std::vector<Letter> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(all));
  }

  BraidWord then(Letter l) const { return then(BraidWord(strands_, {l})); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(letters_[i].signed_index());
    }
    return s;
  }

  /// Shortlex: shorter words first, then letter ranks left to right.
  friend bool shortlex_less(const BraidWord& a, const BraidWord& b) {
    if (a.length() != b.length())
      return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
      int ra = letter_rank(a.letters_[i]);
      int rb = letter_rank(b.letters_[i]);
      if (ra != rb)
        return ra < rb;
    }
    return false;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

} // namespace jwrep
