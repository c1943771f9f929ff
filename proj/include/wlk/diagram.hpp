#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wlk/common.hpp"
#include "wlk/words.hpp"

namespace wlk {

enum class Kind { Link, StringLink };

enum class Role { Over, Under };

inline std::string kind_name(Kind k) {
  return k == Kind::Link ? "link" : "stringlink";
}

// One chord endpoint on a component. `chord` is a dense internal index.
struct Endpoint {
  int chord = -1;
  Role role = Role::Over;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Welded (string) link as signed chords on component endpoint sequences.
// Component sequences are cyclic for links and read bottom-to-top for string
// links; virtual crossings carry no data and are not represented.
struct GaussDiagram {
  struct End {
    int comp = -1;
    int pos = -1;
  };

  Kind kind = Kind::Link;
  int n = 0;
  std::vector<std::vector<Endpoint>> comps;
  std::vector<int> chord_ids;    // dense index -> external id
  std::vector<int> chord_signs;  // dense index -> +1 / -1
  std::vector<End> over_end;     // dense index -> over endpoint location
  std::vector<End> under_end;

  int chords() const { return static_cast<int>(chord_ids.size()); }

  // Rebuilds endpoint lookups and validates the two-endpoints-per-chord rule.
  void reindex() {
    const int m = chords();
    over_end.assign(m, {});
    under_end.assign(m, {});
    std::vector<int> seen_over(m, 0), seen_under(m, 0);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      for (int p = 0; p < static_cast<int>(comps[c].size()); ++p) {
        const Endpoint& e = comps[c][p];
        if (e.chord < 0 || e.chord >= m)
          throw parse_error("endpoint references unknown chord");
        if (e.role == Role::Over) {
          ++seen_over[e.chord];
          over_end[e.chord] = {c, p};
        } else {
          ++seen_under[e.chord];
          under_end[e.chord] = {c, p};
        }
      }
    }
    for (int i = 0; i < m; ++i) {
      if (seen_over[i] != 1 || seen_under[i] != 1)
        throw parse_error("chord " + std::to_string(chord_ids[i]) +
                          " must have exactly one over and one under endpoint");
    }
  }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.kind == b.kind && a.n == b.n && a.comps == b.comps &&
           a.chord_ids == b.chord_ids && a.chord_signs == b.chord_signs;
  }
};

// Gauss code: `<kind> <n>` then one `/`-prefixed code per component, with
// tokens O<id><sign> / U<id><sign>. Whitespace and newlines are equivalent.
inline GaussDiagram parse_gauss(const std::string& text) {
  std::string spaced;
  spaced.reserve(text.size() + 8);
  for (char ch : text) {
    if (ch == '/') {
      spaced += " / ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream in(spaced);
  std::string tok;
  GaussDiagram d;
  if (!(in >> tok)) throw parse_error("empty gauss code");
  if (tok == "link") {
    d.kind = Kind::Link;
  } else if (tok == "stringlink") {
    d.kind = Kind::StringLink;
  } else {
    throw parse_error("expected 'link' or 'stringlink', got '" + tok + "'");
  }
  if (!(in >> d.n) || d.n < 1) throw parse_error("bad component count");

  std::vector<std::vector<std::pair<int, std::pair<Role, int>>>> raw;  // id,(role,sign)
  int comp = -1;
  while (in >> tok) {
    if (tok == "/") {
      ++comp;
      raw.emplace_back();
      continue;
    }
    if (comp < 0) throw parse_error("endpoint token before first '/'");
    if (tok.size() < 3) throw parse_error("malformed token '" + tok + "'");
    Role role;
    if (tok[0] == 'O') {
      role = Role::Over;
    } else if (tok[0] == 'U') {
      role = Role::Under;
    } else {
      throw parse_error("malformed token '" + tok + "'");
    }
    char sg = tok.back();
    int sign = sg == '+' ? +1 : sg == '-' ? -1 : 0;
    if (sign == 0) throw parse_error("malformed sign in token '" + tok + "'");
    std::string num = tok.substr(1, tok.size() - 2);
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("malformed chord id in token '" + tok + "'");
    int id = std::stoi(num);
    if (id <= 0) throw parse_error("chord ids must be positive");
    raw[comp].push_back({id, {role, sign}});
  }
  if (static_cast<int>(raw.size()) != d.n)
    throw parse_error("expected " + std::to_string(d.n) + " component codes, got " +
                      std::to_string(raw.size()));

  // Dense chord indexing in order of first appearance; signs must agree at
  // both endpoints.
  std::vector<std::optional<int>> sign_of;
  auto dense = [&](int id) {
    for (int i = 0; i < static_cast<int>(d.chord_ids.size()); ++i)
      if (d.chord_ids[i] == id) return i;
    d.chord_ids.push_back(id);
    d.chord_signs.push_back(0);
    return static_cast<int>(d.chord_ids.size()) - 1;
  };
  d.comps.resize(d.n);
  for (int c = 0; c < d.n; ++c) {
    for (auto& [id, rs] : raw[c]) {
      int idx = dense(id);
      if (d.chord_signs[idx] == 0) {
        d.chord_signs[idx] = rs.second;
      } else if (d.chord_signs[idx] != rs.second) {
        throw parse_error("chord " + std::to_string(id) +
                          " has inconsistent signs");
      }
      d.comps[c].push_back({idx, rs.first});
    }
  }
  d.reindex();
  return d;
}

inline std::string serialize(const GaussDiagram& d) {
  std::ostringstream out;
  out << kind_name(d.kind) << ' ' << d.n << '\n';
  for (const auto& comp : d.comps) {
    out << '/';
    for (const Endpoint& e : comp) {
      out << ' ' << (e.role == Role::Over ? 'O' : 'U') << d.chord_ids[e.chord]
          << (d.chord_signs[e.chord] > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

// Arc identifier: ordinal counted from the component basepoint in
// orientation order.
struct ArcRef {
  int comp = -1;
  int ord = -1;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

// One Wirtinger relation out = in^(over^sign), attached to an under endpoint.
struct WirtingerRelation {
  ArcRef out, in, over;
  int sign = +1;
  int pos = -1;  // textual position of the under endpoint
};

// Arc generators and crossing relations of the diagram group, with one
// meridian basepoint per component. For string links the basepoint is the
// bottom arc; for links it is recorded as a textual arc ordinal.
struct WirtingerData {
  Kind kind = Kind::Link;
  int n = 0;
  std::vector<int> basepoints;      // textual arc ordinal per component
  std::vector<int> arcs_per_comp;   //
  std::vector<int> arc_offset;      // global arc index = offset[comp] + ord
  std::vector<int> unders_per_comp;
  std::vector<std::vector<WirtingerRelation>> relations;  // walk order
  int arc_count = 0;

  int arc_index(ArcRef a) const { return arc_offset[a.comp] + a.ord; }
  int gen_of(ArcRef a) const { return arc_index(a) + 1; }
  ArcRef arc_of_gen(int gen) const {
    int idx = gen - 1;
    for (int c = n - 1; c >= 0; --c)
      if (idx >= arc_offset[c]) return {c, idx - arc_offset[c]};
    throw parse_error("generator out of range");
  }
  int meridian_gen(int comp) const { return gen_of({comp, 0}); }
};

namespace detail {
// Positions of under endpoints on one component, in textual order.
inline std::vector<int> under_positions(const GaussDiagram& d, int comp) {
  std::vector<int> u;
  for (int p = 0; p < static_cast<int>(d.comps[comp].size()); ++p)
    if (d.comps[comp][p].role == Role::Under) u.push_back(p);
  return u;
}

// Textual arc ordinal of a non-boundary position.
inline int textual_arc(const std::vector<int>& unders, Kind kind, int pos) {
  int before = 0;
  for (int u : unders)
    if (u < pos) ++before;
  if (kind == Kind::StringLink) return before;
  int k = static_cast<int>(unders.size());
  return k == 0 ? 0 : before % k;
}
}  // namespace detail

// Builds arcs and relations. `basepoints` gives one textual arc ordinal per
// component for links (default 0, the arc containing the textual start of the
// code line); string-link basepoints are forced to the bottom arcs.
inline WirtingerData wirtinger(const GaussDiagram& d,
                               std::vector<int> basepoints = {}) {
  WirtingerData w;
  w.kind = d.kind;
  w.n = d.n;
  if (basepoints.empty()) basepoints.assign(d.n, 0);
  if (static_cast<int>(basepoints.size()) != d.n)
    throw parse_error("need one basepoint per component");
  w.basepoints = basepoints;
  w.arcs_per_comp.resize(d.n);
  w.arc_offset.resize(d.n);
  w.unders_per_comp.resize(d.n);
  w.relations.resize(d.n);

  std::vector<std::vector<int>> unders(d.n);
  for (int c = 0; c < d.n; ++c) {
    unders[c] = detail::under_positions(d, c);
    int k = static_cast<int>(unders[c].size());
    w.unders_per_comp[c] = k;
    int arcs = d.kind == Kind::StringLink ? k + 1 : std::max(k, 1);
    w.arcs_per_comp[c] = arcs;
    w.arc_offset[c] = w.arc_count;
    w.arc_count += arcs;
    int b = basepoints[c];
    if (d.kind == Kind::StringLink) {
      if (b != 0) throw parse_error("string-link basepoints are bottom arcs");
    } else if (b < 0 || b >= arcs) {
      throw parse_error("basepoint arc out of range");
    }
  }

  // Arc ordinal of a position, counted from the component's basepoint.
  auto arc_at = [&](GaussDiagram::End e) -> ArcRef {
    int t = detail::textual_arc(unders[e.comp], d.kind, e.pos);
    if (d.kind == Kind::StringLink) return {e.comp, t};
    int k = std::max(w.unders_per_comp[e.comp], 1);
    return {e.comp, ((t - basepoints[e.comp]) % k + k) % k};
  };

  for (int c = 0; c < d.n; ++c) {
    int k = w.unders_per_comp[c];
    for (int j = 0; j < k; ++j) {
      // Walk starts just before the (b+j)-th under endpoint past the
      // basepoint cut.
      int uj = d.kind == Kind::StringLink
                   ? unders[c][j]
                   : unders[c][(basepoints[c] + j) % k];
      const Endpoint& e = d.comps[c][uj];
      WirtingerRelation r;
      r.pos = uj;
      r.in = {c, j};
      r.out = {c, d.kind == Kind::StringLink ? j + 1 : (j + 1) % k};
      r.over = arc_at(d.over_end[e.chord]);
      r.sign = d.chord_signs[e.chord];
      w.relations[c].push_back(r);
    }
  }
  return w;
}

// Raw letters of w_J: one (arc generator, chord sign) per under endpoint in
// the textual interval [beg, end) of the component, unreduced.
inline std::vector<Letter> w_letters(const GaussDiagram& d,
                                     const WirtingerData& w, int comp, int beg,
                                     int end) {
  if (comp < 0 || comp >= d.n) throw parse_error("component out of range");
  int len = static_cast<int>(d.comps[comp].size());
  if (beg < 0 || end < beg || end > len)
    throw parse_error("J is not an interval of the component");
  std::vector<Letter> out;
  for (const WirtingerRelation& r : w.relations[comp])
    if (r.pos >= beg && r.pos < end) out.push_back({w.gen_of(r.over), r.sign});
  return out;
}

inline FreeWord w_word(const GaussDiagram& d, const WirtingerData& w, int comp,
                       int beg, int end) {
  return FreeWord(w.arc_count, w_letters(d, w, comp, beg, end));
}

// Longitude of component i as a word on arc generators: m_i^-k times the
// product of over generators along the whole component from the basepoint,
// where k cancels the component's own contribution.
inline FreeWord longitude(const GaussDiagram& d, const WirtingerData& w,
                          int comp) {
  FreeWord word(w.arc_count);
  long long k = 0;
  for (const WirtingerRelation& r : w.relations[comp]) {
    word.push({w.gen_of(r.over), r.sign});
    if (r.over.comp == comp) k += r.sign;
  }
  return pow(FreeWord::generator(w.arc_count, w.meridian_gen(comp)), -k) * word;
}

}  // namespace wlk
