#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "wlk/common.hpp"

namespace wlk {

// One signed letter of a free-group word. Generators are 1-based.
struct Letter {
  int gen = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on generators x1..xn.
class FreeWord {
 public:
  FreeWord() = default;

  explicit FreeWord(int rank) : rank_(rank) { check_rank(rank); }

  FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
    check_rank(rank);
    letters_.reserve(letters.size());
    for (const Letter& l : letters) push(l);
  }

  static FreeWord generator(int rank, int gen, int sign = +1) {
    FreeWord w(rank);
    w.push({gen, sign});
    return w;
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  // Appends one letter, cancelling against the tail so the word stays reduced.
  void push(Letter l) {
    if (l.gen < 1 || l.gen > rank_) throw parse_error("generator out of range");
    if (l.sign != +1 && l.sign != -1) throw parse_error("bad letter sign");
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  FreeWord inverse() const {
    FreeWord r(rank_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back({it->gen, -it->sign});
    return r;
  }

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    if (u.rank_ != v.rank_) throw parse_error("rank mismatch in word product");
    FreeWord r = u;
    for (const Letter& l : v.letters_) r.push(l);
    return r;
  }

  FreeWord& operator*=(const FreeWord& v) { return *this = *this * v; }

  friend bool operator==(const FreeWord& u, const FreeWord& v) {
    return u.rank_ == v.rank_ && u.letters_ == v.letters_;
  }

 private:
  static void check_rank(int rank) {
    if (rank < 0) throw parse_error("negative rank");
  }

  int rank_ = 0;
  std::vector<Letter> letters_;
};

// a^b = b^-1 a b
inline FreeWord conjugate(const FreeWord& a, const FreeWord& b) {
  return b.inverse() * a * b;
}

// [a,b] = a^-1 b^-1 a b
inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline FreeWord pow(const FreeWord& a, long long e) {
  FreeWord base = e >= 0 ? a : a.inverse();
  FreeWord r(a.rank());
  for (long long i = 0, m = e >= 0 ? e : -e; i < m; ++i) r *= base;
  return r;
}

inline long long exponent_sum(const FreeWord& u, int gen) {
  if (gen < 1 || gen > u.rank()) throw parse_error("generator out of range");
  long long s = 0;
  for (const Letter& l : u.letters())
    if (l.gen == gen) s += l.sign;
  return s;
}

// Token format: `x3` is generator 3, `X3` its inverse, whitespace-separated.
inline std::string format_word(const FreeWord& u) {
  std::string out;
  for (const Letter& l : u.letters()) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? 'x' : 'X');
    out += std::to_string(l.gen);
  }
  return out;
}

inline FreeWord parse_word(int rank, const std::string& text) {
  FreeWord w(rank);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      throw parse_error("bad word token '" + tok + "'");
    for (std::size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw parse_error("bad word token '" + tok + "'");
    w.push({std::stoi(tok.substr(1)), tok[0] == 'x' ? +1 : -1});
  }
  return w;
}

}  // namespace wlk
