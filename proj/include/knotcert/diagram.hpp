#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotcert/braid.hpp"
#include "knotcert/error.hpp"
#include "knotcert/linalg.hpp"

namespace knotcert {

/// One crossing of a PD code. `arcs` are listed counterclockwise starting
/// from the incoming under-arc, so the under strand runs slot 0 -> slot 2.
/// The over strand runs 3 -> 1 at a positive crossing and 1 -> 3 at a
/// negative one.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const { return slot == 0 || slot == over_in_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Slot reference inside a diagram.
struct CrossingSlot {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const CrossingSlot&, const CrossingSlot&) = default;
};

/// An oriented planar link diagram: a PD code plus the number of extra
/// crossingless circles. The empty PD code with one loop is the unknot.
class LinkDiagram {
 public:
  /// The 0-crossing unknot.
  LinkDiagram() : free_loops_(1) {}

  explicit LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw MalformedInput("negative loop count");
    index_arcs();
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }

  /// Arc ids in increasing order.
  std::vector<int> arc_ids() const {
    std::vector<int> ids;
    for (const auto& [id, ends] : ends_) ids.push_back(id);
    return ids;
  }

  /// Where arc `id` leaves a crossing and where it enters the next one.
  CrossingSlot arc_tail(int id) const { return ends_.at(id).first; }
  CrossingSlot arc_head(int id) const { return ends_.at(id).second; }

  /// The other occurrence of the arc sitting at `cs`.
  CrossingSlot opposite(CrossingSlot cs) const {
    const auto& [tail, head] = ends_.at(arc_at(cs));
    return cs == tail ? head : tail;
  }

  int arc_at(CrossingSlot cs) const { return crossings_[cs.crossing].arcs[cs.slot]; }

 private:
  void index_arcs() {
    std::map<int, std::pair<std::optional<CrossingSlot>, std::optional<CrossingSlot>>> seen;
    for (int c = 0; c < crossing_count(); ++c) {
      const Crossing& x = crossings_[c];
      if (x.sign != 1 && x.sign != -1)
        throw MalformedInput("crossing " + std::to_string(c) + " has sign other than +1/-1");
      for (int s = 0; s < 4; ++s) {
        auto& [tail, head] = seen[x.arcs[s]];
        auto& slot = x.is_incoming(s) ? head : tail;
        if (slot)
          throw MalformedInput("arc " + std::to_string(x.arcs[s]) + " is " +
                               (x.is_incoming(s) ? "entered" : "left") +
                               " twice; orientation inconsistent with crossing signs");
        slot = CrossingSlot{c, s};
      }
    }
    for (const auto& [id, ends] : seen) {
      if (!ends.first || !ends.second)
        throw MalformedInput("arc " + std::to_string(id) + " does not occur exactly twice");
      ends_[id] = {*ends.first, *ends.second};
    }
  }

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::map<int, std::pair<CrossingSlot, CrossingSlot>> ends_;
};

// ---------------------------------------------------------------------------
// PD text format

/// One crossing per line: `X a b c d s` with s in {+,-}. A line `O` adds a
/// crossingless circle; `#` starts a comment. Empty input is the unknot.
inline LinkDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  int loops = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    const std::string where = "PD line " + std::to_string(lineno);
    if (tag == "O") {
      ++loops;
      continue;
    }
    if (tag != "X") throw MalformedInput(where + ": expected 'X' or 'O', got '" + tag + "'");
    Crossing x;
    for (int& a : x.arcs)
      if (!(ls >> a)) throw MalformedInput(where + ": expected four arc ids");
    std::string s;
    if (!(ls >> s) || (s != "+" && s != "-"))
      throw MalformedInput(where + ": expected crossing sign '+' or '-'");
    x.sign = s == "+" ? 1 : -1;
    if (ls >> s) throw MalformedInput(where + ": trailing token '" + s + "'");
    crossings.push_back(x);
  }
  if (crossings.empty() && loops == 0) loops = 1;
  return LinkDiagram(std::move(crossings), loops);
}

inline std::string to_pd_string(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& x : d.crossings())
    os << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << ' '
       << (x.sign > 0 ? '+' : '-') << '\n';
  const int loops = d.crossings().empty() && d.free_loops() == 1 ? 0 : d.free_loops();
  for (int i = 0; i < loops; ++i) os << "O\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Construction from unoriented crossings

namespace detail {

/// Collects crossings given by their four ends in counterclockwise order with
/// the under strand on ends 0 and 2, plus the edges joining ends. `build`
/// orients every component and emits the PD code.
class DiagramBuilder {
 public:
  int add_crossing() {
    links_.push_back({});
    return static_cast<int>(links_.size()) - 1;
  }

  void connect(CrossingSlot a, CrossingSlot b) {
    at(a) = b;
    at(b) = a;
  }

  void add_free_loop() { ++loops_; }

  /// Orients components by walking from each seed, taken as an entering end;
  /// components without a seed are oriented from their first free end.
  LinkDiagram build(const std::vector<CrossingSlot>& seeds = {}) const {
    const int n = static_cast<int>(links_.size());
    std::vector<std::array<int, 4>> dir(n, {0, 0, 0, 0});  // +1 entering, -1 leaving
    auto walk = [&](CrossingSlot start) {
      CrossingSlot cur = start;
      while (dir[cur.crossing][cur.slot] == 0) {
        CrossingSlot out{cur.crossing, (cur.slot + 2) % 4};
        dir[cur.crossing][cur.slot] = 1;
        dir[out.crossing][out.slot] = -1;
        cur = links_[out.crossing][out.slot];
        if (cur.crossing < 0) throw PreconditionError("dangling crossing end");
      }
    };
    for (const auto& s : seeds)
      if (dir[s.crossing][s.slot] == 0) walk(s);
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s)
        if (dir[c][s] == 0) walk({c, s});

    // Arc ids follow edges; id of the edge leaving (c, s).
    std::vector<std::array<int, 4>> arc(n, {0, 0, 0, 0});
    int next_id = 1;
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s)
        if (dir[c][s] == -1) {
          arc[c][s] = next_id;
          const CrossingSlot o = links_[c][s];
          arc[o.crossing][o.slot] = next_id;
          ++next_id;
        }

    std::vector<Crossing> crossings;
    for (int c = 0; c < n; ++c) {
      const int under_in = dir[c][0] == 1 ? 0 : 2;
      Crossing x;
      for (int k = 0; k < 4; ++k) x.arcs[k] = arc[c][(under_in + k) % 4];
      // In the rotated frame the over strand enters at slot 3 or slot 1.
      x.sign = dir[c][(under_in + 3) % 4] == 1 ? 1 : -1;
      crossings.push_back(x);
    }
    return LinkDiagram(std::move(crossings), loops_);
  }

 private:
  CrossingSlot& at(CrossingSlot s) { return links_[s.crossing][s.slot]; }

  std::vector<std::array<CrossingSlot, 4>> links_;
  int loops_ = 0;
};

// Ends of a braid-style crossing, strands running top to bottom.
enum BraidEnd { kTopLeft, kTopRight, kBottomLeft, kBottomRight };

/// Slot order for a braid-style crossing. `left_over` means the strand from
/// the top-left passes over.
inline std::array<BraidEnd, 4> braid_crossing_ends(bool left_over) {
  // Counterclockwise from the top-left is TL, BL, BR, TR.
  if (left_over) return {kTopRight, kTopLeft, kBottomLeft, kBottomRight};
  return {kTopLeft, kBottomLeft, kBottomRight, kTopRight};
}

inline int slot_of(const std::array<BraidEnd, 4>& ends, BraidEnd e) {
  return static_cast<int>(std::find(ends.begin(), ends.end(), e) - ends.begin());
}

}  // namespace detail

/// Closure of a braid drawn with strands running downward. Letter +i gives a
/// positive crossing (the strand from the upper right passes over).
inline LinkDiagram braid_closure(const BraidWord& w) {
  const int n = w.strands();
  detail::DiagramBuilder b;
  std::vector<std::optional<CrossingSlot>> open(n), first(n);
  std::vector<CrossingSlot> seeds;
  auto enter = [&](int pos, CrossingSlot s) {
    seeds.push_back(s);
    if (open[pos])
      b.connect(*open[pos], s);
    else
      first[pos] = s;
  };
  for (int e : w.letters()) {
    const int i = std::abs(e) - 1;
    const auto ends = detail::braid_crossing_ends(e < 0);
    const int c = b.add_crossing();
    enter(i, {c, detail::slot_of(ends, detail::kTopLeft)});
    enter(i + 1, {c, detail::slot_of(ends, detail::kTopRight)});
    open[i] = CrossingSlot{c, detail::slot_of(ends, detail::kBottomLeft)};
    open[i + 1] = CrossingSlot{c, detail::slot_of(ends, detail::kBottomRight)};
  }
  for (int pos = 0; pos < n; ++pos) {
    if (first[pos])
      b.connect(*open[pos], *first[pos]);
    else
      b.add_free_loop();
  }
  return b.build(seeds);
}

/// Standard pretzel diagram: vertical twist regions of |a_i| crossings placed
/// side by side and joined in a circle. With this handedness P(-1,-1,-1) is
/// the right-handed trefoil.
inline LinkDiagram pretzel_diagram(const std::vector<int>& twists) {
  if (twists.empty()) throw PreconditionError("pretzel needs at least one tangle");
  for (int a : twists)
    if (a == 0) throw Unsupported("pretzel tangle 1/0 is not supported");
  detail::DiagramBuilder b;
  struct Region {
    CrossingSlot tl, tr, bl, br;
  };
  std::vector<Region> regions;
  for (int a : twists) {
    const auto ends = detail::braid_crossing_ends(a < 0);
    auto slot = [&](int c, detail::BraidEnd e) { return CrossingSlot{c, detail::slot_of(ends, e)}; };
    Region r{};
    int prev = -1;
    for (int k = 0; k < std::abs(a); ++k) {
      const int c = b.add_crossing();
      if (prev < 0) {
        r.tl = slot(c, detail::kTopLeft);
        r.tr = slot(c, detail::kTopRight);
      } else {
        b.connect(slot(prev, detail::kBottomLeft), slot(c, detail::kTopLeft));
        b.connect(slot(prev, detail::kBottomRight), slot(c, detail::kTopRight));
      }
      prev = c;
    }
    r.bl = slot(prev, detail::kBottomLeft);
    r.br = slot(prev, detail::kBottomRight);
    regions.push_back(r);
  }
  const std::size_t l = regions.size();
  for (std::size_t i = 0; i + 1 < l; ++i) {
    b.connect(regions[i].tr, regions[i + 1].tl);
    b.connect(regions[i].br, regions[i + 1].bl);
  }
  b.connect(regions.front().tl, regions.back().tr);
  b.connect(regions.front().bl, regions.back().br);
  return b.build();
}

/// Parses `a1,a2,...` (commas and/or whitespace).
inline std::vector<int> parse_pretzel(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw MalformedInput("bad pretzel entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw MalformedInput("empty pretzel list");
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial invariants

inline long writhe(const LinkDiagram& d) {
  long w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

inline bool is_positive(const LinkDiagram& d) {
  return std::all_of(d.crossings().begin(), d.crossings().end(),
                     [](const Crossing& x) { return x.sign > 0; });
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  for (const auto& x : d.crossings()) {
    // The old over strand becomes the under strand; rotate so its incoming
    // arc comes first.
    const int r = x.over_in_slot();
    Crossing m;
    for (int k = 0; k < 4; ++k) m.arcs[k] = x.arcs[(r + k) % 4];
    m.sign = -x.sign;
    out.push_back(m);
  }
  return LinkDiagram(std::move(out), d.free_loops());
}

namespace detail {

/// Counts cycles of a map on arc ids given as "arc entering slot s of crossing
/// c continues as the arc leaving slot next(c, s)".
template <class Next>
std::vector<std::vector<int>> arc_cycles(const LinkDiagram& d, Next next) {
  std::map<int, bool> seen;
  std::vector<std::vector<int>> cycles;
  for (int id : d.arc_ids()) {
    if (seen[id]) continue;
    std::vector<int> cyc;
    for (int a = id; !seen[a];) {
      seen[a] = true;
      cyc.push_back(a);
      const CrossingSlot h = d.arc_head(a);
      a = d.crossings()[h.crossing].arcs[next(d.crossings()[h.crossing], h.slot)];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline int straight_through(const Crossing& x, int in_slot) {
  return in_slot == 0 ? 2 : x.over_out_slot();
}

inline int seifert_smoothing(const Crossing& x, int in_slot) {
  return in_slot == 0 ? x.over_out_slot() : 2;
}

}  // namespace detail

/// Arcs of each link component in traversal order. Crossingless circles are
/// not listed; see `component_count`.
inline std::vector<std::vector<int>> component_arcs(const LinkDiagram& d) {
  return detail::arc_cycles(d, detail::straight_through);
}

inline int component_count(const LinkDiagram& d) {
  return static_cast<int>(component_arcs(d).size()) + d.free_loops();
}

inline int seifert_circle_count(const LinkDiagram& d) {
  return static_cast<int>(detail::arc_cycles(d, detail::seifert_smoothing).size()) + d.free_loops();
}

/// Whether the diagram's projection is connected (no split pieces).
inline bool is_connected(const LinkDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.free_loops() <= 1;
  if (d.free_loops() > 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int id : d.arc_ids()) parent[find(d.arc_tail(id).crossing)] = find(d.arc_head(id).crossing);
  for (int c = 0; c < n; ++c)
    if (find(c) != find(0)) return false;
  return true;
}

/// The diagram of a single component, obtained by deleting all other
/// components; crossings with other components disappear and their arcs merge.
inline LinkDiagram component_diagram(const LinkDiagram& d, int component) {
  const auto comps = component_arcs(d);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw PreconditionError("no component " + std::to_string(component) + " with crossings");
  std::map<int, int> owner;
  for (int k = 0; k < static_cast<int>(comps.size()); ++k)
    for (int a : comps[k]) owner[a] = k;

  std::map<int, int> parent;
  for (int a : comps[component]) parent[a] = a;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Crossing> kept;
  for (const auto& x : d.crossings()) {
    const bool under_mine = owner[x.arcs[0]] == component;
    const bool over_mine = owner[x.arcs[x.over_in_slot()]] == component;
    if (under_mine && over_mine) {
      kept.push_back(x);
    } else if (under_mine) {
      parent[find(x.arcs[0])] = find(x.arcs[2]);
    } else if (over_mine) {
      parent[find(x.arcs[x.over_in_slot()])] = find(x.arcs[x.over_out_slot()]);
    }
  }
  if (kept.empty()) return LinkDiagram();
  for (auto& x : kept)
    for (int& a : x.arcs) a = find(a);
  return LinkDiagram(std::move(kept));
}

// ---------------------------------------------------------------------------
// Goeritz matrix and Gordon-Litherland signature

struct GoeritzData {
  /// Face index (0-based) of each corner; corner k of a crossing lies between
  /// slots k and k+1.
  std::vector<std::array<int, 4>> corner_face;
  /// Colour of each face: true for white.
  std::vector<bool> white;
  /// Goeritz matrix on white faces with the last white face deleted.
  IntMatrix matrix;
  /// Gordon-Litherland correction: sum of incidence numbers over type II crossings.
  long correction = 0;
  int face_count() const { return static_cast<int>(white.size()); }
};

enum class WhiteChoice { kSmallerClass, kClassOfFirstCorner, kOtherClass };

/// Checkerboard colouring, Goeritz matrix and correction term of a connected
/// diagram. The incidence number of a crossing is +1 when its white corners
/// are corners 0 and 2; a crossing is of type II when its oriented smoothing
/// merges the two black corners.
inline GoeritzData goeritz(const LinkDiagram& d, WhiteChoice choice = WhiteChoice::kSmallerClass) {
  if (!is_connected(d)) throw PreconditionError("Goeritz matrix needs a connected diagram");
  GoeritzData g;
  const int n = d.crossing_count();
  if (n == 0) {
    g.white = {true, false};
    return g;
  }
  // Face tracing: leave along slot s, arrive at the opposite slot j, leave
  // again along slot j+1. Every face is traced by one orbit.
  std::vector<std::array<int, 4>> face_of_start(n, {-1, -1, -1, -1});
  int faces = 0;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (face_of_start[c][s] >= 0) continue;
      CrossingSlot cur{c, s};
      while (face_of_start[cur.crossing][cur.slot] < 0) {
        face_of_start[cur.crossing][cur.slot] = faces;
        const CrossingSlot o = d.opposite(cur);
        cur = {o.crossing, (o.slot + 1) % 4};
      }
      ++faces;
    }
  if (faces != n + 2) throw PreconditionError("diagram is not planar (face count mismatch)");
  g.corner_face.assign(n, {});
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) g.corner_face[c][k] = face_of_start[c][(k + 1) % 4];

  // Two-colour the faces; the two sides of an arc differ.
  std::vector<int> colour(faces, -1);
  std::vector<std::vector<int>> adj(faces);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const CrossingSlot o = d.opposite({c, s});
      adj[face_of_start[c][s]].push_back(face_of_start[o.crossing][o.slot]);
    }
  colour[g.corner_face[0][0]] = 0;
  std::vector<int> stack{g.corner_face[0][0]};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int h : adj[f]) {
      if (colour[h] < 0) {
        colour[h] = 1 - colour[f];
        stack.push_back(h);
      } else if (colour[h] == colour[f]) {
        throw PreconditionError("faces admit no checkerboard colouring");
      }
    }
  }
  int white_class = 0;
  if (choice == WhiteChoice::kOtherClass) {
    white_class = 1;
  } else if (choice == WhiteChoice::kSmallerClass) {
    const auto zeros = std::count(colour.begin(), colour.end(), 0);
    white_class = zeros * 2 <= faces ? 0 : 1;
  }
  g.white.resize(faces);
  std::vector<int> index(faces, -1);
  int whites = 0;
  for (int f = 0; f < faces; ++f) {
    g.white[f] = colour[f] == white_class;
    if (g.white[f]) index[f] = whites++;
  }

  IntMatrix full(whites, std::vector<Integer>(whites, 0));
  for (int c = 0; c < n; ++c) {
    const auto& corners = g.corner_face[c];
    const bool even_white = g.white[corners[0]];
    const int eta = even_white ? 1 : -1;
    const int fa = index[corners[even_white ? 0 : 1]];
    const int fb = index[corners[even_white ? 2 : 3]];
    if (fa != fb) {
      full[fa][fb] -= eta;
      full[fb][fa] -= eta;
      full[fa][fa] += eta;
      full[fb][fb] += eta;
    }
    // The oriented smoothing hugs corners {0,2} at a positive crossing and
    // {1,3} at a negative one, merging the other pair.
    const bool merges_black = (d.crossings()[c].sign > 0) == even_white;
    if (merges_black) g.correction += eta;
  }
  g.matrix.assign(whites - 1, std::vector<Integer>(whites - 1));
  for (int i = 0; i + 1 < whites; ++i)
    for (int j = 0; j + 1 < whites; ++j) g.matrix[i][j] = full[i][j];
  return g;
}

/// |det| of the Goeritz matrix; 0 for split diagrams.
inline Integer determinant(const LinkDiagram& d) {
  if (!is_connected(d)) return 0;
  return boost::multiprecision::abs(determinant(goeritz(d).matrix));
}

/// Knot signature, normalised so that the right-handed trefoil has -2.
inline int signature(const LinkDiagram& d, WhiteChoice choice = WhiteChoice::kSmallerClass) {
  if (component_count(d) != 1) throw PreconditionError("signature is only computed for knots");
  if (d.crossing_count() == 0) return 0;
  const GoeritzData g = goeritz(d, choice);
  return signature(g.matrix) - static_cast<int>(g.correction);
}

}  // namespace knotcert
