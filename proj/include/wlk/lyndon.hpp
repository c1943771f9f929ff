#pragma once

#include <vector>

#include "wlk/series.hpp"
#include "wlk/words.hpp"

namespace wlk {

// Binary bracket expression over an alphabet of generator indices.
// Leaves hold letters; internal nodes are commutators [left, right].
struct Bracket {
  struct Node {
    int letter = 0;
    int left = -1, right = -1;
    bool leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;
  int root = -1;

  int weight(int at = -1) const {
    const Node& nd = nodes[at < 0 ? root : at];
    return nd.leaf() ? 1 : weight(nd.left) + weight(nd.right);
  }

  FreeWord word(int rank, int at = -1) const {
    const Node& nd = nodes[at < 0 ? root : at];
    if (nd.leaf()) return FreeWord::generator(rank, nd.letter);
    return commutator(word(rank, nd.left), word(rank, nd.right));
  }
};

// All Lyndon words of length 1..maxlen over the given (ascending) letters,
// by Duval's algorithm, ordered lexicographically.
inline std::vector<std::vector<int>> lyndon_words(
    const std::vector<int>& letters, int maxlen) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(letters.size());
  if (k == 0 || maxlen < 1) return out;
  std::vector<int> w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) <= maxlen) {
      std::vector<int> mapped(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) mapped[i] = letters[w[i]];
      out.push_back(std::move(mapped));
    }
    std::size_t n = w.size();
    while (w.size() < static_cast<std::size_t>(maxlen))
      w.push_back(w[w.size() - n]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace detail {
inline int lyndon_bracket_rec(const std::vector<int>& w, std::size_t lo,
                              std::size_t hi, Bracket& b) {
  if (hi - lo == 1) {
    b.nodes.push_back({w[lo], -1, -1});
    return static_cast<int>(b.nodes.size()) - 1;
  }
  // Standard factorization: split before the lexicographically least proper
  // suffix, which is itself Lyndon.
  std::size_t split = lo + 1;
  for (std::size_t s = lo + 2; s < hi; ++s) {
    if (std::lexicographical_compare(w.begin() + s, w.begin() + hi,
                                     w.begin() + split, w.begin() + hi))
      split = s;
  }
  int l = lyndon_bracket_rec(w, lo, split, b);
  int r = lyndon_bracket_rec(w, split, hi, b);
  b.nodes.push_back({0, l, r});
  return static_cast<int>(b.nodes.size()) - 1;
}
}  // namespace detail

// Standard (right-normed) bracketing of a Lyndon word.
inline Bracket lyndon_bracket(const std::vector<int>& w) {
  Bracket b;
  b.root = detail::lyndon_bracket_rec(w, 0, w.size(), b);
  return b;
}

// Basic commutators of the given weight: bracketed Lyndon words in lex order.
inline std::vector<Bracket> basic_commutators(const std::vector<int>& letters,
                                              int weight) {
  std::vector<Bracket> out;
  for (const auto& w : lyndon_words(letters, weight))
    if (static_cast<int>(w.size()) == weight) out.push_back(lyndon_bracket(w));
  return out;
}

struct PeeledFactor {
  Bracket bracket;
  Int multiplicity;  // nonzero; negative means the inverse
  int weight = 0;
};

// Writes `target` (an element of the image of the Magnus expansion) as
// E_q(prod of basic commutators^multiplicity), greedily by weight and then by
// Lyndon order. Fails only on inputs outside the image, which downstream
// callers treat as an internal bug.
inline std::vector<PeeledFactor> peel_series(const TruncSeries& target,
                                             const std::vector<int>& letters) {
  const int rank = target.rank();
  const int q = target.trunc();
  if (target.coefficient({}) != 1)
    throw certification_error("peel target has constant term != 1");
  std::vector<PeeledFactor> out;
  FreeWord acc(rank);
  for (int w = 1; w < q; ++w) {
    TruncSeries residual = magnus(acc, q).inverse() * target;
    if (residual.is_one()) continue;
    int low = residual.lowest_positive_degree();
    if (low < w)
      throw certification_error("peel left a term below the current weight");
    if (low > w) continue;
    auto part = residual.degree_part(w);
    for (const auto& lw : lyndon_words(letters, w)) {
      if (static_cast<int>(lw.size()) != w) continue;
      auto it = part.find(lw);
      if (it == part.end() || it->second == 0) continue;
      Int mult = it->second;
      Bracket b = lyndon_bracket(lw);
      FreeWord bw = b.word(rank);
      // The bracketed word expands as the Lyndon monomial plus lex-greater
      // monomials, so subtracting in lex order solves triangularly.
      auto bpart = magnus(bw, w + 1).degree_part(w);
      for (const auto& [m, c] : bpart) {
        Int& slot = part[m];
        slot -= mult * c;
        if (slot == 0) part.erase(m);
      }
      long long reps = 0;
      if (mult < -1000000 || mult > 1000000)
        throw certification_error("peel multiplicity out of sane range");
      reps = mult.convert_to<long long>();
      acc *= pow(bw, reps);
      out.push_back({std::move(b), mult, w});
    }
    if (!part.empty())
      throw certification_error("peel residual is not in the Lie span");
  }
  if (!(magnus(acc, q) == target))
    throw certification_error("peel did not reproduce its target");
  return out;
}

// Same, for a group word: factors whose product equals u in N_qF_n.
inline std::vector<PeeledFactor> peel_word(const FreeWord& u, int q) {
  std::vector<int> letters;
  for (const Letter& l : u.letters())
    letters.push_back(l.gen);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return peel_series(magnus(u, q), letters);
}

}  // namespace wlk
