#pragma once

#include <map>
#include <vector>

#include "wlk/common.hpp"
#include "wlk/words.hpp"

namespace wlk {

// Monomial in noncommuting variables X1..Xn: the sequence of indices.
using Monomial = std::vector<int>;

// Compares by (length, lexicographic); the canonical term order everywhere.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Integer noncommutative polynomial truncated below degree q: an element of
// Z<X1..Xn>/X^q. Stored sparsely; zero coefficients are never kept.
class TruncSeries {
 public:
  using Terms = std::map<Monomial, Int, MonomialOrder>;

  TruncSeries(int rank, int trunc) : rank_(rank), trunc_(trunc) {
    if (rank < 0 || trunc < 1) throw parse_error("bad series rank/truncation");
  }

  static TruncSeries one(int rank, int trunc) {
    TruncSeries s(rank, trunc);
    s.terms_[{}] = 1;
    return s;
  }

  int rank() const { return rank_; }
  int trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == 1;
  }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) >= trunc_) return;
    for (int i : m)
      if (i < 1 || i > rank_) throw parse_error("monomial index out of range");
    Int& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries r(a.rank_, a.trunc_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (static_cast<int>(ma.size() + mb.size()) >= a.trunc_) continue;
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

  // Two-sided inverse; requires constant term 1 (the subgroup U_1).
  TruncSeries inverse() const {
    if (coefficient({}) != 1)
      throw parse_error("series inverse needs constant term 1");
    TruncSeries n = *this;
    n.terms_.erase(Monomial{});  // n = this - 1
    TruncSeries r = one(rank_, trunc_);
    TruncSeries p = one(rank_, trunc_);
    for (int k = 1; k < trunc_; ++k) {
      p = p * n;
      if (p.is_zero()) break;
      int sgn = (k % 2 == 0) ? +1 : -1;
      for (const auto& [m, c] : p.terms_) r.add_term(m, sgn > 0 ? c : -c);
    }
    return r;
  }

  // Homogeneous part of the given degree.
  Terms degree_part(int d) const {
    Terms out;
    for (const auto& [m, c] : terms_)
      if (static_cast<int>(m.size()) == d) out[m] = c;
    return out;
  }

  // Smallest degree >= 1 with a nonzero term, or trunc() if none.
  int lowest_positive_degree() const {
    for (const auto& [m, c] : terms_)
      if (!m.empty()) return static_cast<int>(m.size());
    return trunc_;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.rank_ == b.rank_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncSeries& b) const {
    if (rank_ != b.rank_ || trunc_ != b.trunc_)
      throw parse_error("series rank/truncation mismatch");
  }

  int rank_;
  int trunc_;
  Terms terms_;
};

// Magnus expansion of one letter: x_i -> 1+X_i, inverse -> 1-X_i+X_i^2-...
inline TruncSeries magnus_letter(int rank, int q, Letter l) {
  TruncSeries s = TruncSeries::one(rank, q);
  Monomial m;
  for (int d = 1; d < q; ++d) {
    m.push_back(l.gen);
    if (l.sign > 0) {
      if (d == 1) s.add_term(m, 1);
    } else {
      s.add_term(m, d % 2 == 0 ? 1 : -1);
    }
  }
  return s;
}

inline TruncSeries magnus(const FreeWord& u, int q) {
  TruncSeries s = TruncSeries::one(u.rank(), q);
  for (const Letter& l : u.letters()) s *= magnus_letter(u.rank(), q, l);
  return s;
}

// Equality in the nilpotent quotient N_qF_n, decided through the injective
// induced Magnus expansion E_q.
inline bool nq_equal(const FreeWord& u, const FreeWord& v, int q) {
  if (u.rank() != v.rank()) throw parse_error("rank mismatch in nq_equal");
  return magnus(u, q) == magnus(v, q);
}

// Largest k <= q with u in the k-th lower central subgroup, capped at q.
// Returns q when magnus(u, q) = 1 (read as "at least q").
inline int lcs_depth(const FreeWord& u, int q) {
  if (q < 1) throw parse_error("lcs_depth needs q >= 1");
  for (int k = 1; k < q; ++k)
    if (!magnus(u, k + 1).is_one()) return k;
  return q;  // magnus(u, q) = 1 is forced once every smaller check passed
}

// Splices c into u at the given letter position. c must lie in the q-th
// lower central subgroup, so the result equals u in N_qF_n.
inline FreeWord insert_commutator(const FreeWord& u, std::size_t position,
                                  const FreeWord& c, int q) {
  if (u.rank() != c.rank()) throw parse_error("rank mismatch in insertion");
  if (position > u.length()) throw parse_error("insertion position past end");
  if (lcs_depth(c, q) < q)
    throw parse_error("inserted word is not of weight >= q");
  FreeWord r(u.rank());
  for (std::size_t i = 0; i < position; ++i) r.push(u.letters()[i]);
  for (const Letter& l : c.letters()) r.push(l);
  for (std::size_t i = position; i < u.length(); ++i) r.push(u.letters()[i]);
  return r;
}

}  // namespace wlk
