#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arcc/normal_arc.hpp"
#include "arcc/surface.hpp"

namespace arcc {

namespace detail {

// Data for rerouting normal coordinates through one flip. Removing the
// flipped arc merges its two hexagons into an octagon; stations 0..7 are its
// sides in cyclic order (even = boundary, odd = arc), and the new arc is the
// chord joining stations 2 and 6. Merged boundary stations carry two old
// sides; the chord splits stations 2 and 6 in two.
struct PlanPart {
  int piece = -1;
  int side = -1;
  bool flip = false;  // old side traversed against its piece orientation
};

struct PlanStation {
  PlanPart part[2];
  int nparts = 1;
};

struct SideImage {
  int piece = -1;
  int side = -1;
};

struct TransportPlan {
  int piece_p = -1, piece_q = -1;  // FROM pieces forming the region
  int eslot_side_p = -1, eslot_side_q = -1;
  PlanStation st[8];
  int station_of[2][6];  // per FROM piece (p:0, q:1) and side; -1 for the e sides
  int part_of[2][6];
  SideImage img[8][2];  // TO side per station part; split singles: [0]=first, [1]=second
  SideImage chord[2];   // TO side of the chord in half 0 (stations 3..5) / half 1 (7..1)
};

} // namespace detail

struct FlipMove {
  std::shared_ptr<const Triangulation> source;
  std::shared_ptr<const Triangulation> target;
  int arc = -1;      // flipped arc, source id
  int new_arc = -1;  // replacement, target id
  NormalArc replacement;  // new arc in source coordinates
  NormalArc removed;      // flipped arc in target coordinates
  std::vector<int> arc_to_target;  // source arc -> target arc ([arc] == new_arc)
  std::vector<int> arc_to_source;
  detail::TransportPlan fwd, bwd;

  FlipMove inverse() const;
};

bool flippable(const Triangulation& t, int arc);

// Every essential arc (including `arc` itself) completing the codimension-1
// face t minus `arc` back to a triangulation. Size 2 when the arc's slots lie
// in distinct pieces (octagon region), 1 when self-paired (annulus/Moebius).
std::vector<NormalArc> completions(const Triangulation& t, int arc);

FlipMove flip(const Triangulation& t, int arc);

// transport() but resolving the flipped arc itself to the move's removed
// class instead of throwing. Used when replaying chains.
NormalArc transport_or_swap(const NormalArc& a, const FlipMove& move);

struct BallLimits {
  std::size_t max_nodes = 500000;
};

struct BallNode {
  std::shared_ptr<const Triangulation> tri;
  std::vector<NormalArc> arcs_root;  // node arc id -> canonical root coordinates
  std::vector<std::string> arc_keys;
  std::string key;
  int depth = 0;
  int parent = -1;
  int parent_edge = -1;
  bool expanded = false;
};

struct BallEdge {
  int from = -1, to = -1;
  int arc = -1;  // flipped arc, from-node id
  FlipMove move;
};

// A flip of an unexpanded frontier node, recorded without creating the node.
struct FrontierProbe {
  int node = -1;
  int arc = -1;
  std::string target_key;
  std::string new_arc_key;
  bool in_ball = false;
};

struct FlipGraphBall {
  std::shared_ptr<const Triangulation> root;
  int radius = 0;
  bool truncated = false;
  bool stabilized = false;  // the whole (finite) flip graph was explored
  std::vector<BallNode> nodes;
  std::vector<BallEdge> edges;
  std::vector<FrontierProbe> probes;
  std::map<std::string, int> index;

  std::vector<std::vector<std::pair<int, int>>> adjacency() const;  // (edge, neighbor)
};

FlipGraphBall flip_graph_ball(const Triangulation& root, int radius,
                              const BallLimits& limits = {});

// Shortest flip chain between two ball nodes, as moves applied left to right.
std::vector<FlipMove> connect_chain(const FlipGraphBall& ball, int n1, int n2);

} // namespace arcc
