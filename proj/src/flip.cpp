#include "arcc/flip.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace arcc {

namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }

NormalArc make_replacement(const Triangulation& t, int arc) {
  auto [g1, g2] = t.arc_slots(arc);
  SlotRef a = Triangulation::slot_ref(g1), b = Triangulation::slot_ref(g2);
  std::vector<NormalArc::Counts> counts(t.piece_count());
  for (auto& c : counts) c.fill(0);
  counts[a.piece][segment_type(a.side, mod6(a.side + 3))] += 1;
  counts[b.piece][segment_type(b.side, mod6(b.side + 3))] += 1;
  return NormalArc::from_counts(
      std::move(counts),
      {EndpointMark{a.piece, mod6(a.side + 3), 0}, EndpointMark{b.piece, mod6(b.side + 3), 0}});
}

// Octagon stations around `arc` in FROM coordinates. q's sides run backwards
// when the gluing is parallel.
void build_stations(const Triangulation& t, int arc, detail::TransportPlan& plan) {
  auto [g1, g2] = t.arc_slots(arc);
  SlotRef sa = Triangulation::slot_ref(g1), sb = Triangulation::slot_ref(g2);
  bool anti = (t.reversal(g1) == Reversal::antiparallel);
  int p = sa.piece, sp = sa.side;
  int q = sb.piece, sq = sb.side;
  plan.piece_p = p;
  plan.piece_q = q;
  plan.eslot_side_p = sp;
  plan.eslot_side_q = sq;
  bool qflip = !anti;
  auto aq = [&](int k) { return anti ? mod6(sq + k) : mod6(sq - k); };

  auto single = [&](detail::PlanStation& st, int piece, int side, bool flip) {
    st.nparts = 1;
    st.part[0] = {piece, side, flip};
  };
  auto merged = [&](detail::PlanStation& st, detail::PlanPart first, detail::PlanPart second) {
    st.nparts = 2;
    st.part[0] = first;
    st.part[1] = second;
  };

  merged(plan.st[0], {q, aq(5), qflip}, {p, mod6(sp + 1), false});
  single(plan.st[1], p, mod6(sp + 2), false);
  single(plan.st[2], p, mod6(sp + 3), false);
  single(plan.st[3], p, mod6(sp + 4), false);
  merged(plan.st[4], {p, mod6(sp + 5), false}, {q, aq(1), qflip});
  single(plan.st[5], q, aq(2), qflip);
  single(plan.st[6], q, aq(3), qflip);
  single(plan.st[7], q, aq(4), qflip);

  for (int i = 0; i < 2; ++i)
    for (int s = 0; s < 6; ++s) plan.station_of[i][s] = plan.part_of[i][s] = -1;
  auto pi = [&](int piece) { return piece == p ? 0 : 1; };
  for (int s = 0; s < 8; ++s)
    for (int k = 0; k < plan.st[s].nparts; ++k) {
      const auto& part = plan.st[s].part[k];
      plan.station_of[pi(part.piece)][part.side] = s;
      plan.part_of[pi(part.piece)][part.side] = k;
    }
}

// Half of the octagon a station belongs to after splitting along the chord:
// stations 3,4,5 are half 0 and 7,0,1 are half 1. Split stations 2 and 6
// resolve per part (or per choice, for an endpoint in a side's interior).
int half_of_part(int station, int part) {
  switch (station) {
    case 3: case 4: case 5: return 0;
    case 7: case 0: case 1: return 1;
    case 2: return part == 0 ? 1 : 0;
    case 6: return part == 0 ? 0 : 1;
  }
  throw internal_error("bad station");
}

} // namespace

bool flippable(const Triangulation& t, int arc) {
  if (arc < 0 || arc >= t.arc_count()) throw rejected_input("unknown arc id");
  return !t.self_paired(arc);
}

std::vector<NormalArc> completions(const Triangulation& t, int arc) {
  if (arc < 0 || arc >= t.arc_count()) throw rejected_input("unknown arc id");
  // Merge across `arc` only: cut along the codimension-1 face.
  std::vector<int> face;
  for (int x = 0; x < t.arc_count(); ++x)
    if (x != arc) face.push_back(x);
  RegionReport rr = cut_along(t, face);
  SlotRef home = Triangulation::slot_ref(t.arc_slots(arc)[0]);
  const Region* region = nullptr;
  for (const auto& reg : rr.regions)
    if (std::find(reg.pieces.begin(), reg.pieces.end(), home.piece) != reg.pieces.end())
      region = &reg;
  if (!region) throw internal_error("completions: region not found");

  if (!t.self_paired(arc)) {
    // Octagon disk (the word lists 4 arc sides and 6 boundary sides; the two
    // runs of adjacent boundary labels merge where the removed arc ended).
    // The face extends to exactly two triangulations: the original arc or
    // the opposite diagonal.
    int arc_sides = 0;
    if (region->boundary_cycles.size() == 1)
      for (const auto& lab : region->boundary_cycles.front()) arc_sides += lab.is_arc;
    if (region->euler != 1 || region->boundary_cycles.size() != 1 || arc_sides != 4 ||
        region->boundary_cycles.front().size() != 10)
      throw internal_error("completions: merged region is not an octagon");
    std::vector<NormalArc> out = {NormalArc::base(arc), make_replacement(t, arc)};
    if (out[1].key() < out[0].key()) std::swap(out[0], out[1]);
    return out;
  }
  // Self-gluing: annulus or Moebius band; re-splitting it into a hexagon
  // forces the original arc back.
  if (region->euler != 0)
    throw internal_error("completions: self-glued region is not annulus/Moebius");
  return {NormalArc::base(arc)};
}

FlipMove flip(const Triangulation& t, int arc) {
  if (!flippable(t, arc))
    throw non_flippable("arc " + std::to_string(arc) + " has a unique completion");

  FlipMove m;
  m.source = std::make_shared<const Triangulation>(t);
  m.arc = arc;
  build_stations(t, arc, m.fwd);
  const auto& plan = m.fwd;
  int p = plan.piece_p, q = plan.piece_q;
  int sp = plan.eslot_side_p, sq = plan.eslot_side_q;

  // New hexagons reuse the old piece indices: X = p carries stations 3..5,
  // Y = q carries stations 7..1.
  detail::TransportPlan& f = m.fwd;
  f.img[0][0] = f.img[0][1] = {q, 3};
  f.img[1][0] = {q, 4};
  f.img[2][0] = {q, 5};  // first part of the split boundary side
  f.img[2][1] = {p, 1};
  f.img[3][0] = {p, 2};
  f.img[4][0] = f.img[4][1] = {p, 3};
  f.img[5][0] = {p, 4};
  f.img[6][0] = {p, 5};
  f.img[6][1] = {q, 1};
  f.img[7][0] = {q, 2};
  f.chord[0] = {p, 0};
  f.chord[1] = {q, 0};

  // Rebuild the pairings. Sides inside the region map through the station
  // images; a flipped traversal toggles the reversal flag.
  auto map_slot = [&](SlotRef s, bool& flipped) -> SlotRef {
    flipped = false;
    int idx = (s.piece == p) ? 0 : (s.piece == q ? 1 : -1);
    if (idx < 0) return s;
    int st = plan.station_of[idx][s.side];
    if (st < 0) throw internal_error("flip: mapping an e-side");
    int part = plan.part_of[idx][s.side];
    flipped = plan.st[st].part[part].flip;
    return {f.img[st][part].piece, f.img[st][part].side};
  };

  std::vector<PairingSpec> pairings;
  for (int x = 0; x < t.arc_count(); ++x) {
    if (x == arc) continue;
    auto [u, v] = t.arc_slots(x);
    bool fu, fv;
    SlotRef nu = map_slot(Triangulation::slot_ref(u), fu);
    SlotRef nv = map_slot(Triangulation::slot_ref(v), fv);
    bool par = (t.reversal(u) == Reversal::parallel) ^ fu ^ fv;
    pairings.push_back({nu, nv, par ? Reversal::parallel : Reversal::antiparallel});
  }
  pairings.push_back({{p, 0}, {q, 0}, Reversal::antiparallel});
  Triangulation target(t.piece_count(), pairings);
  m.target = std::make_shared<const Triangulation>(std::move(target));
  m.new_arc = m.target->arc_of_slot(Triangulation::slot_index(p, 0));

  m.arc_to_target.assign(t.arc_count(), -1);
  m.arc_to_source.assign(t.arc_count(), -1);
  for (int x = 0; x < t.arc_count(); ++x) {
    if (x == arc) continue;
    bool f_;
    SlotRef nu = map_slot(Triangulation::slot_ref(t.arc_slots(x)[0]), f_);
    m.arc_to_target[x] = m.target->arc_of_slot(Triangulation::slot_index(nu.piece, nu.side));
    m.arc_to_source[m.arc_to_target[x]] = x;
  }
  m.arc_to_target[arc] = m.new_arc;
  m.arc_to_source[m.new_arc] = arc;

  m.replacement = make_replacement(t, arc);
  m.removed = make_replacement(*m.target, m.new_arc);

  // Backward plan: the octagon around the new arc in target coordinates,
  // with images restoring the original sides. The new arc glues sides 0 of
  // p and q antiparallel, and the original arc's slots satisfied p < q, so
  // build_stations keeps the (p, q) roles.
  detail::TransportPlan& b = m.bwd;
  build_stations(*m.target, m.new_arc, b);
  if (b.piece_p != p)
    throw internal_error("flip: unexpected slot order for the new arc");
  bool qrev = (t.reversal(t.arc_slots(arc)[0]) == Reversal::parallel);
  auto aq = [&](int k) { return qrev ? mod6(sq - k) : mod6(sq + k); };
  b.img[0][0] = b.img[0][1] = {p, mod6(sp + 3)};
  b.img[1][0] = {p, mod6(sp + 4)};
  b.img[2][0] = {p, mod6(sp + 5)};
  b.img[2][1] = {q, aq(1)};
  b.img[3][0] = {q, aq(2)};
  b.img[4][0] = b.img[4][1] = {q, aq(3)};
  b.img[5][0] = {q, aq(4)};
  b.img[6][0] = {q, aq(5)};
  b.img[6][1] = {p, mod6(sp + 1)};
  b.img[7][0] = {p, mod6(sp + 2)};
  b.chord[0] = {q, sq};
  b.chord[1] = {p, sp};
  return m;
}

FlipMove FlipMove::inverse() const {
  FlipMove inv;
  inv.source = target;
  inv.target = source;
  inv.arc = new_arc;
  inv.new_arc = arc;
  inv.replacement = removed;
  inv.removed = replacement;
  inv.arc_to_target = arc_to_source;
  inv.arc_to_source = arc_to_target;
  inv.fwd = bwd;
  inv.bwd = fwd;
  return inv;
}

namespace {

// Reroute the strands of `a` through the plan's octagon.
NormalArc transport_with_plan(const Triangulation& from, const Triangulation& to,
                              const detail::TransportPlan& plan, int from_arc,
                              const std::vector<int>& arc_map, const NormalArc& a0) {
  NormalArc a = canonicalize(from, a0);
  if (a.is_base()) {
    if (a.base_arc() == from_arc)
      throw undefined_transport("transport of the flipped arc; use the replacement");
    return NormalArc::base(arc_map[a.base_arc()]);
  }

  auto tr = normal_detail::trace_path(from, a);
  if (!tr.ok()) throw rejected_input("transport: arc not normal: " + tr.diag);

  int p = plan.piece_p, q = plan.piece_q;
  auto in_region = [&](int piece) { return piece == p || piece == q; };
  auto pidx = [&](int piece) { return piece == p ? 0 : 1; };
  auto is_e_side = [&](int piece, int side) {
    return (piece == p && side == plan.eslot_side_p) || (piece == q && side == plan.eslot_side_q);
  };

  std::vector<NormalArc::Counts> counts(to.piece_count());
  for (auto& c : counts) c.fill(0);
  for (int piece = 0; piece < from.piece_count(); ++piece)
    if (!in_region(piece)) counts[piece] = a.counts()[piece];

  std::vector<EndpointMark> marks;
  // Endpoints outside the region keep their sides.
  if (!in_region(a.endpoints()[0].piece)) marks.push_back(a.endpoints()[0]);
  if (!in_region(a.endpoints()[1].piece)) marks.push_back(a.endpoints()[1]);

  struct RunEnd {
    int station = -1;
    int part = -1;  // -1 = free placement (endpoint inside a split side)
  };
  auto classify_end = [&](int piece, int side) -> RunEnd {
    RunEnd e;
    e.station = plan.station_of[pidx(piece)][side];
    if (e.station < 0) throw internal_error("transport: end on an e-side");
    int part = plan.part_of[pidx(piece)][side];
    if ((e.station == 2 || e.station == 6) && plan.st[e.station].nparts == 1)
      e.part = -1;  // interior of the side that the chord splits
    else
      e.part = part;
    return e;
  };
  auto emit = [&](RunEnd u, RunEnd v, bool u_endpoint, bool v_endpoint) {
    int hu = (u.part >= 0) ? half_of_part(u.station, u.part) : -1;
    int hv = (v.part >= 0) ? half_of_part(v.station, v.part) : -1;
    if (hu < 0 && hv < 0) hu = hv = 0;       // both ends on the split sides
    else if (hu < 0) hu = hv;                // place the free endpoint to avoid a crossing
    else if (hv < 0) hv = hu;
    auto to_side = [&](const RunEnd& e, int h) -> detail::SideImage {
      if ((e.station == 2 || e.station == 6) && plan.st[e.station].nparts == 1) {
        // split side: choose the part lying in half h
        int part = (half_of_part(e.station, 0) == h) ? 0 : 1;
        return plan.img[e.station][part];
      }
      return plan.img[e.station][e.part];
    };
    detail::SideImage su = to_side(u, hu), sv = to_side(v, hv);
    if (hu == hv) {
      counts[su.piece][segment_type(su.side, sv.side)] += 1;
    } else {
      counts[su.piece][segment_type(su.side, plan.chord[hu].side)] += 1;
      counts[sv.piece][segment_type(plan.chord[hv].side, sv.side)] += 1;
    }
    if (u_endpoint) marks.push_back({su.piece, su.side, 0});
    if (v_endpoint) marks.push_back({sv.piece, sv.side, 0});
  };

  const auto& steps = tr.steps;
  size_t i = 0;
  while (i < steps.size()) {
    if (!in_region(steps[i].piece)) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < steps.size() && in_region(steps[j + 1].piece) &&
           is_e_side(steps[j].piece, steps[j].out_side))
      ++j;
    bool u_endpoint = (i == 0);
    bool v_endpoint = (j + 1 == steps.size());
    RunEnd u = classify_end(steps[i].piece, steps[i].in_side);
    RunEnd v = classify_end(steps[j].piece, steps[j].out_side);
    emit(u, v, u_endpoint, v_endpoint);
    i = j + 1;
  }

  if (marks.size() != 2) throw internal_error("transport lost an endpoint");
  std::array<EndpointMark, 2> ends = {marks[0], marks[1]};
  NormalArc raw = NormalArc::from_counts(std::move(counts), ends);
  auto canon = try_canonicalize(to, raw);
  if (!canon) throw internal_error("transport produced an inessential arc");
  return *canon;
}

} // namespace

NormalArc transport(const NormalArc& a, const FlipMove& move) {
  return transport_with_plan(*move.source, *move.target, move.fwd, move.arc,
                             move.arc_to_target, a);
}

NormalArc transport_or_swap(const NormalArc& a, const FlipMove& move) {
  if (a.is_base() && a.base_arc() == move.arc) return move.removed;
  return transport(a, move);
}

StraightenResult straighten(const Triangulation& t, const NormalArc& a0) {
  NormalArc cur = canonicalize(t, a0);
  StraightenResult res;
  res.target = t;
  while (!cur.is_base()) {
    std::uint64_t w = cur.total_weight();
    bool advanced = false;
    for (int e = 0; e < res.target.arc_count() && !advanced; ++e) {
      if (!flippable(res.target, e)) continue;
      if (crossings_on_arc(res.target, cur, e) == 0) continue;
      FlipMove m = flip(res.target, e);
      NormalArc moved = transport(cur, m);
      if (moved.total_weight() < w) {
        res.target = *m.target;
        res.moves.push_back(std::move(m));
        cur = std::move(moved);
        advanced = true;
      }
    }
    if (!advanced) throw internal_error("straighten: no weight-reducing flip exists");
  }
  res.arc = cur.base_arc();
  return res;
}

std::uint32_t intersection_number(const Triangulation& t, const NormalArc& a0,
                                  const NormalArc& b0) {
  NormalArc a = canonicalize(t, a0);
  NormalArc b = canonicalize(t, b0);
  if (a == b) return 0;
  Triangulation T = t;
  while (true) {
    if (b.is_base()) return crossings_on_arc(T, a, b.base_arc());
    if (a.is_base()) return crossings_on_arc(T, b, a.base_arc());
    std::uint64_t w = a.total_weight();
    bool advanced = false;
    for (int e = 0; e < T.arc_count() && !advanced; ++e) {
      if (!flippable(T, e)) continue;
      if (crossings_on_arc(T, a, e) == 0) continue;
      FlipMove m = flip(T, e);
      NormalArc moved = transport(a, m);
      if (moved.total_weight() < w) {
        b = transport(b, m);
        T = *m.target;
        a = std::move(moved);
        advanced = true;
      }
    }
    if (!advanced) throw internal_error("intersection_number: straightening stalled");
  }
}

namespace {

std::string node_key(const std::vector<std::string>& arc_keys) {
  std::vector<std::string> sorted = arc_keys;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& k : sorted) {
    key += k;
    key += '#';
  }
  return key;
}

// Root coordinates of an arc given in `node` coordinates: replay the BFS tree
// path backwards.
NormalArc to_root_coords(const FlipGraphBall& ball, int node, NormalArc arc) {
  int cur = node;
  while (cur != 0) {
    const BallEdge& e = ball.edges[ball.nodes[cur].parent_edge];
    arc = transport_or_swap(arc, e.move.inverse());
    cur = ball.nodes[cur].parent;
  }
  return arc;
}

} // namespace

std::vector<std::vector<std::pair<int, int>>> FlipGraphBall::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].from].push_back({static_cast<int>(e), edges[e].to});
    adj[edges[e].to].push_back({static_cast<int>(e), edges[e].from});
  }
  return adj;
}

FlipGraphBall flip_graph_ball(const Triangulation& root, int radius, const BallLimits& limits) {
  if (radius < 0) throw rejected_input("negative radius");
  auto diags = validate_triangulation(root);
  if (!diags.empty()) throw rejected_input("invalid root triangulation: " + diags.front());

  FlipGraphBall ball;
  ball.root = std::make_shared<const Triangulation>(root);
  ball.radius = radius;

  BallNode n0;
  n0.tri = ball.root;
  for (int a = 0; a < root.arc_count(); ++a) {
    n0.arcs_root.push_back(NormalArc::base(a));
    n0.arc_keys.push_back(n0.arcs_root.back().key());
  }
  n0.key = node_key(n0.arc_keys);
  ball.index[n0.key] = 0;
  ball.nodes.push_back(std::move(n0));

  for (size_t qi = 0; qi < ball.nodes.size(); ++qi) {
    if (ball.nodes[qi].depth >= radius) continue;
    if (ball.truncated) break;
    int depth = ball.nodes[qi].depth;

    // Flip order: lexicographic on the canonical arc keys.
    std::vector<int> order(ball.nodes[qi].tri->arc_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return ball.nodes[qi].arc_keys[x] < ball.nodes[qi].arc_keys[y];
    });

    for (int e : order) {
      const Triangulation& tri = *ball.nodes[qi].tri;
      if (!flippable(tri, e)) continue;
      FlipMove m = flip(tri, e);
      NormalArc root_new = to_root_coords(ball, static_cast<int>(qi), m.replacement);
      std::string new_key = root_new.key();

      std::vector<NormalArc> arcs(m.arc_to_target.size());
      std::vector<std::string> keys(m.arc_to_target.size());
      for (int x = 0; x < static_cast<int>(m.arc_to_target.size()); ++x) {
        if (x == e) continue;
        arcs[m.arc_to_target[x]] = ball.nodes[qi].arcs_root[x];
        keys[m.arc_to_target[x]] = ball.nodes[qi].arc_keys[x];
      }
      arcs[m.new_arc] = root_new;
      keys[m.new_arc] = new_key;
      std::string key = node_key(keys);

      auto it = ball.index.find(key);
      int to;
      if (it != ball.index.end()) {
        to = it->second;
      } else {
        if (ball.nodes.size() >= limits.max_nodes) {
          ball.truncated = true;
          break;
        }
        BallNode nn;
        nn.tri = m.target;
        nn.arcs_root = std::move(arcs);
        nn.arc_keys = std::move(keys);
        nn.key = key;
        nn.depth = depth + 1;
        nn.parent = static_cast<int>(qi);
        nn.parent_edge = static_cast<int>(ball.edges.size());
        to = static_cast<int>(ball.nodes.size());
        ball.index[key] = to;
        ball.nodes.push_back(std::move(nn));
      }
      ball.edges.push_back({static_cast<int>(qi), to, e, std::move(m)});
    }
    ball.nodes[qi].expanded = true;
  }

  bool all_expanded = true;
  for (const auto& n : ball.nodes) all_expanded = all_expanded && n.expanded;
  ball.stabilized = all_expanded && !ball.truncated;

  // Frontier probes for interiority: record where each unexpanded node's
  // flips would lead, without growing the ball.
  if (!ball.truncated) {
    for (size_t qi = 0; qi < ball.nodes.size(); ++qi) {
      if (ball.nodes[qi].expanded) continue;
      const Triangulation& tri = *ball.nodes[qi].tri;
      for (int e = 0; e < tri.arc_count(); ++e) {
        if (!flippable(tri, e)) continue;
        FlipMove m = flip(tri, e);
        NormalArc root_new = to_root_coords(ball, static_cast<int>(qi), m.replacement);
        std::vector<std::string> keys(m.arc_to_target.size());
        for (int x = 0; x < static_cast<int>(m.arc_to_target.size()); ++x)
          if (x != e) keys[m.arc_to_target[x]] = ball.nodes[qi].arc_keys[x];
        keys[m.new_arc] = root_new.key();
        FrontierProbe probe;
        probe.node = static_cast<int>(qi);
        probe.arc = e;
        probe.new_arc_key = root_new.key();
        probe.target_key = node_key(keys);
        probe.in_ball = ball.index.count(probe.target_key) > 0;
        ball.probes.push_back(std::move(probe));
      }
    }
  }
  return ball;
}

std::vector<FlipMove> connect_chain(const FlipGraphBall& ball, int n1, int n2) {
  int N = static_cast<int>(ball.nodes.size());
  if (n1 < 0 || n1 >= N || n2 < 0 || n2 >= N)
    throw rejected_input("node id outside the ball");
  if (n1 == n2) return {};
  auto adj = ball.adjacency();
  std::vector<int> prev_node(N, -1);
  std::deque<int> que{n1};
  prev_node[n1] = n1;
  while (!que.empty()) {
    int u = que.front();
    que.pop_front();
    if (u == n2) break;
    for (auto [e, v] : adj[u]) {
      (void)e;
      if (prev_node[v] != -1) continue;
      prev_node[v] = u;
      que.push_back(v);
    }
  }
  if (prev_node[n2] == -1)
    throw not_connected_in_ball("nodes lie in different components of the truncated ball");
  std::vector<int> path;
  for (int cur = n2; cur != n1; cur = prev_node[cur]) path.push_back(cur);
  path.push_back(n1);
  std::reverse(path.begin(), path.end());

  // Equal ball nodes reached along different paths may carry different piece
  // labellings, so chain moves are recomputed step by step: each node's key
  // set pins down the flipped arc, and the new arc's key is the set
  // difference at the next node.
  std::vector<FlipMove> chain;
  Triangulation cur = *ball.nodes[n1].tri;
  std::vector<std::string> keys = ball.nodes[n1].arc_keys;
  for (size_t i = 1; i < path.size(); ++i) {
    std::set<std::string> next_keys(ball.nodes[path[i]].arc_keys.begin(),
                                    ball.nodes[path[i]].arc_keys.end());
    int flip_arc = -1;
    for (int a = 0; a < static_cast<int>(keys.size()); ++a)
      if (!next_keys.count(keys[a])) flip_arc = a;
    if (flip_arc < 0) throw internal_error("connect_chain: adjacent nodes share all arcs");
    std::string incoming;
    std::set<std::string> cur_keys(keys.begin(), keys.end());
    for (const auto& k : next_keys)
      if (!cur_keys.count(k)) incoming = k;
    FlipMove m = flip(cur, flip_arc);
    std::vector<std::string> moved(keys.size());
    for (int a = 0; a < static_cast<int>(keys.size()); ++a)
      if (a != flip_arc) moved[m.arc_to_target[a]] = keys[a];
    moved[m.new_arc] = incoming;
    cur = *m.target;
    keys = std::move(moved);
    chain.push_back(std::move(m));
  }
  return chain;
}

} // namespace arcc
