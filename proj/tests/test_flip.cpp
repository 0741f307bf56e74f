#include "doctest.h"

#include <random>
#include <set>

#include "arcc/flip.hpp"

using namespace arcc;

namespace {

// Test-only oracle: enumerate every chord of the merged region's boundary
// word that splits it into two alternating hexagons. Runs of consecutive
// boundary labels collapse into a single effective side first (the removed
// arc's endpoints no longer subdivide the boundary).
int count_octagon_splits(const Triangulation& t, int arc) {
  std::vector<int> face;
  for (int x = 0; x < t.arc_count(); ++x)
    if (x != arc) face.push_back(x);
  RegionReport rr = cut_along(t, face);
  SlotRef home = Triangulation::slot_ref(t.arc_slots(arc)[0]);
  for (const auto& reg : rr.regions) {
    if (std::find(reg.pieces.begin(), reg.pieces.end(), home.piece) == reg.pieces.end()) continue;
    if (reg.euler != 1 || reg.boundary_cycles.size() != 1) return -1;  // not a disk
    const auto& word = reg.boundary_cycles.front();
    int n = static_cast<int>(word.size());
    // rotate to start at an arc label, then collapse boundary runs
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (word[i].is_arc) start = i;
    if (start < 0) return -1;
    std::vector<bool> reduced;  // true = arc side
    for (int k = 0; k < n; ++k) {
      bool is_arc = word[(start + k) % n].is_arc;
      if (is_arc)
        reduced.push_back(true);
      else if (reduced.back())
        reduced.push_back(false);
      // consecutive boundary labels merge into the previous entry
    }
    int m = static_cast<int>(reduced.size());
    int splits = 0;
    // A chord between the interiors of effective boundary sides i and j
    // splits into hexagons iff both halves read A B A strictly between.
    for (int i = 0; i < m; ++i) {
      if (reduced[i]) continue;
      for (int j = i + 1; j < m; ++j) {
        if (reduced[j]) continue;
        auto alternates = [&](int from, int to) {
          std::vector<bool> between;
          for (int k = (from + 1) % m; k != to; k = (k + 1) % m)
            between.push_back(reduced[k]);
          if (between.size() != 3) return false;
          return between[0] && !between[1] && between[2];
        };
        if (alternates(i, j) && alternates(j, i)) ++splits;
      }
    }
    return splits;
  }
  return -1;
}

} // namespace

TEST_CASE("completions: two through an octagon, one at a self-gluing") {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    CAPTURE(g);
    CAPTURE(r);
    Triangulation t = build_surface(g, r, false);
    for (int e = 0; e < t.arc_count(); ++e) {
      auto comp = completions(t, e);
      if (t.self_paired(e)) {
        CHECK(comp.size() == 1);
        CHECK(comp.front() == NormalArc::base(e));
        CHECK_THROWS_AS(flip(t, e), non_flippable);
      } else {
        CHECK(comp.size() == 2);
        // the oracle agrees: exactly two alternating splits of the octagon
        CHECK(count_octagon_splits(t, e) == 2);
        bool has_base = false;
        for (const auto& c : comp)
          if (c.is_base() && c.base_arc() == e) has_base = true;
        CHECK(has_base);
        for (const auto& c : comp) CHECK(validate_normal_arc(t, c).empty());
      }
    }
  }
}

TEST_CASE("flip involution returns to the source node") {
  // Flipping the replacement arc returns to the same node: the same set of
  // arc classes, though the hexagons may come back relabelled.
  Triangulation t = build_surface(2, 2, false);
  for (int e = 0; e < t.arc_count(); ++e) {
    if (!flippable(t, e)) continue;
    CAPTURE(e);
    FlipMove m = flip(t, e);
    CHECK(validate_triangulation(*m.target).empty());
    CHECK(classify_surface(*m.target) == classify_surface(t));
    FlipMove back = flip(*m.target, m.new_arc);
    // Express every arc of the double-flip target in t coordinates; the set
    // must be exactly t's own arcs.
    std::set<int> recovered;
    for (int z = 0; z < back.target->arc_count(); ++z) {
      NormalArc in_mid = transport_or_swap(NormalArc::base(z), back.inverse());
      NormalArc in_t = transport_or_swap(in_mid, m.inverse());
      REQUIRE(in_t.is_base());
      recovered.insert(in_t.base_arc());
    }
    CHECK(static_cast<int>(recovered.size()) == t.arc_count());
  }
}

TEST_CASE("disjoint flips commute") {
  Triangulation t = build_surface(2, 2, false);
  int done = 0;
  for (int e = 0; e < t.arc_count(); ++e) {
    if (!flippable(t, e)) continue;
    for (int f = e + 1; f < t.arc_count(); ++f) {
      if (!flippable(t, f)) continue;
      auto [e1, e2] = t.arc_slots(e);
      auto [f1, f2] = t.arc_slots(f);
      std::set<int> pe = {e1 / 3, e2 / 3}, pf = {f1 / 3, f2 / 3};
      std::vector<int> common;
      std::set_intersection(pe.begin(), pe.end(), pf.begin(), pf.end(),
                            std::back_inserter(common));
      if (!common.empty()) continue;
      FlipMove me = flip(t, e);
      FlipMove m1 = flip(*me.target, me.arc_to_target[f]);
      FlipMove mf = flip(t, f);
      FlipMove m2 = flip(*mf.target, mf.arc_to_target[e]);
      CHECK(*m1.target == *m2.target);
      ++done;
    }
  }
  CHECK(done > 0);
}

TEST_CASE("radius zero ball") {
  Triangulation t = build_surface(1, 2, false);
  FlipGraphBall ball = flip_graph_ball(t, 0);
  CHECK(ball.nodes.size() == 1);
  CHECK(ball.edges.empty());
  CHECK(!ball.stabilized);
}

TEST_CASE("the (1,2) ball stabilizes with 8 distinct arcs") {
  Triangulation t = build_surface(1, 2, false);
  FlipGraphBall ball = flip_graph_ball(t, 32);
  CHECK(ball.stabilized);
  std::set<std::string> arcs;
  for (const auto& n : ball.nodes) {
    CHECK(validate_triangulation(*n.tri).empty());
    for (const auto& k : n.arc_keys) arcs.insert(k);
  }
  CHECK(arcs.size() == 8);
}

TEST_CASE("the (2,1) ball grows linearly and never stabilizes") {
  Triangulation t = build_surface(2, 1, false);
  std::vector<size_t> arc_counts;
  for (int radius : {4, 6, 8}) {
    FlipGraphBall ball = flip_graph_ball(t, radius);
    CHECK(!ball.stabilized);
    std::set<std::string> arcs;
    for (const auto& n : ball.nodes)
      for (const auto& k : n.arc_keys) arcs.insert(k);
    arc_counts.push_back(arcs.size());
  }
  // Four more arcs per unit radius (the dihedral model: each extra layer
  // reaches one new b and one new c on each end of the spine).
  CHECK(arc_counts[0] == 14);
  CHECK(arc_counts[1] - arc_counts[0] == 8);
  CHECK(arc_counts[2] - arc_counts[1] == 8);
}

TEST_CASE("ball node invariants: counts, signature, key size") {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
    Triangulation root = build_surface(g, r, false);
    SurfaceSignature sig = classify_surface(root);
    FlipGraphBall ball = flip_graph_ball(root, 3);
    for (const auto& n : ball.nodes) {
      CHECK(n.tri->arc_count() == 3 * g + 3 * r - 6);
      CHECK(n.tri->piece_count() == 2 * g + 2 * r - 4);
      CHECK(classify_surface(*n.tri) == sig);
      std::set<std::string> distinct(n.arc_keys.begin(), n.arc_keys.end());
      CHECK(distinct.size() == n.arc_keys.size());
    }
    // every edge joins key sets differing in exactly one arc
    for (const auto& e : ball.edges) {
      std::set<std::string> a(ball.nodes[e.from].arc_keys.begin(),
                              ball.nodes[e.from].arc_keys.end());
      std::set<std::string> b(ball.nodes[e.to].arc_keys.begin(),
                              ball.nodes[e.to].arc_keys.end());
      std::vector<std::string> diff;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      CHECK(diff.size() == 1);
    }
  }
}

TEST_CASE("connect_chain finds shortest flip chains") {
  Triangulation root = build_surface(2, 2, false);
  FlipGraphBall ball = flip_graph_ball(root, 4);
  CHECK(connect_chain(ball, 0, 0).empty());

  // adjacent nodes: length 1
  REQUIRE(!ball.edges.empty());
  const BallEdge& e0 = ball.edges.front();
  auto chain = connect_chain(ball, e0.from, e0.to);
  CHECK(chain.size() == 1);

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(ball.nodes.size()) - 1);
  for (int it = 0; it < 100; ++it) {
    int a = pick(rng), b = pick(rng);
    auto ch = connect_chain(ball, a, b);
    // The chain replays move by move from a's triangulation and lands on a
    // triangulation carrying b's arc classes.
    Triangulation cur = *ball.nodes[a].tri;
    for (const auto& m : ch) {
      CHECK(*m.source == cur);
      CHECK(m.arc_to_target.size() == static_cast<size_t>(cur.arc_count()));
      cur = *m.target;
    }
    CHECK(classify_surface(cur) == classify_surface(*ball.nodes[b].tri));
    if (!ch.empty()) CHECK(ch.back().new_arc >= 0);
  }
}

TEST_CASE("truncation is loud") {
  Triangulation root = build_surface(2, 1, false);
  BallLimits limits;
  limits.max_nodes = 3;
  FlipGraphBall ball = flip_graph_ball(root, 10, limits);
  CHECK(ball.truncated);
  CHECK(!ball.stabilized);
}

TEST_CASE("path independence of transport within a ball") {
  // Two different flip paths to the same node move an arc to the same class:
  // compared through crossing counts against the node's arc classes, which
  // are labelling-independent.
  Triangulation root = build_surface(2, 2, false);
  FlipGraphBall ball = flip_graph_ball(root, 2);

  auto tree_moves = [&](int node) {
    std::vector<FlipMove> moves;
    for (int cur = node; cur != 0; cur = ball.nodes[cur].parent)
      moves.push_back(ball.edges[ball.nodes[cur].parent_edge].move);
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  auto signature = [&](const NormalArc& x, const Triangulation& tri,
                       const std::vector<std::string>& keys) {
    std::vector<std::pair<std::string, std::uint32_t>> sig;
    for (int a = 0; a < tri.arc_count(); ++a)
      sig.push_back({keys[a], crossings_on_arc(tri, x, a)});
    std::sort(sig.begin(), sig.end());
    return sig;
  };

  // probe arcs: everything in the root node's star
  std::vector<NormalArc> probes;
  for (int a = 0; a < root.arc_count(); ++a) probes.push_back(NormalArc::base(a));
  for (int e = 0; e < root.arc_count(); ++e)
    if (flippable(root, e)) probes.push_back(flip(root, e).replacement);

  int cycles_checked = 0;
  for (const auto& edge : ball.edges) {
    if (ball.nodes[edge.to].parent_edge >= 0 &&
        &ball.edges[ball.nodes[edge.to].parent_edge] == &edge)
      continue;  // tree edge
    // path 1: tree path to edge.from, then the edge; path 2: tree path to edge.to
    auto path1 = tree_moves(edge.from);
    path1.push_back(edge.move);
    auto path2 = tree_moves(edge.to);

    // arc keys along path 1's endpoint (a label variant of node edge.to)
    std::vector<std::string> keys1(root.arc_count());
    {
      const auto& from = ball.nodes[edge.from];
      auto to_from = tree_moves(edge.from);
      NormalArc moved = edge.move.replacement;  // in edge.from coordinates
      for (auto it = to_from.rbegin(); it != to_from.rend(); ++it)
        moved = transport_or_swap(moved, it->inverse());
      for (int x = 0; x < root.arc_count(); ++x)
        if (x != edge.arc) keys1[edge.move.arc_to_target[x]] = from.arc_keys[x];
      keys1[edge.move.new_arc] = moved.key();
    }

    for (const auto& probe : probes) {
      NormalArc x1 = probe, x2 = probe;
      bool defined = true;
      try {
        for (const auto& m : path1) x1 = transport_or_swap(x1, m);
        for (const auto& m : path2) x2 = transport_or_swap(x2, m);
      } catch (const error&) {
        defined = false;
      }
      if (!defined) continue;
      auto s1 = signature(x1, *edge.move.target, keys1);
      auto s2 = signature(x2, *ball.nodes[edge.to].tri, ball.nodes[edge.to].arc_keys);
      CHECK(s1 == s2);
      CHECK(x1.total_weight() == x2.total_weight());
    }
    if (++cycles_checked >= 12) break;
  }
  CHECK(cycles_checked >= 5);
}

TEST_CASE("straighten then transport back preserves the arc") {
  // The crossing counts with the base arcs survive a straighten round-trip.
  Triangulation root = build_surface(2, 2, false);
  FlipGraphBall ball = flip_graph_ball(root, 2);
  int checked = 0;
  for (const auto& n : ball.nodes) {
    for (const auto& a : n.arcs_root) {
      if (a.is_base()) continue;
      NormalArc canon = canonicalize(root, a);
      StraightenResult sr = straighten(root, a);
      NormalArc back = NormalArc::base(sr.arc);
      for (auto it = sr.moves.rbegin(); it != sr.moves.rend(); ++it)
        back = transport_or_swap(back, it->inverse());
      CHECK(back == canon);
      ++checked;
    }
    if (checked > 25) break;
  }
  CHECK(checked > 5);
}
