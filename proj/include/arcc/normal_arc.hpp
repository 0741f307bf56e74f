#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcc/surface.hpp"

namespace arcc {

// Normal coordinates of an essential properly embedded arc relative to a base
// triangulation: per piece, a count for each of the 15 segment types (one per
// unordered pair of distinct hexagon sides), plus the two endpoint positions.
// Segments never start and end on the same side (such a segment would bound a
// bigon or a trivial arc), so 15 types suffice.
//
// Arcs isotopic to a base triangulation arc are collapsed to a dedicated
// base-arc form with zero counts; everything else carries at least one
// crossing in canonical form.

int segment_type(int side_a, int side_b);
std::pair<int, int> segment_sides(int type);
bool sides_adjacent(int a, int b);
bool types_interleave(int type_a, int type_b);

struct EndpointMark {
  int piece = -1;
  int side = -1;  // odd (boundary side)
  int rank = 0;   // position along the side from its head corner
  auto operator<=>(const EndpointMark&) const = default;
};

class NormalArc {
public:
  using Counts = std::array<std::uint32_t, 15>;

  NormalArc() = default;
  static NormalArc base(int arc);
  static NormalArc from_counts(std::vector<Counts> counts, std::array<EndpointMark, 2> ends);

  bool is_base() const { return base_ >= 0; }
  int base_arc() const { return base_; }
  const std::vector<Counts>& counts() const { return counts_; }
  std::uint32_t count(int piece, int type) const { return counts_[piece][type]; }
  const std::array<EndpointMark, 2>& endpoints() const { return ends_; }

  // Crossings with base arcs, summed.
  std::uint64_t total_weight() const;
  // Strands through one hexagon side.
  std::uint32_t side_load(int piece, int side) const;

  bool operator==(const NormalArc&) const = default;

  // Stable serialization of this representation. Equal canonical forms have
  // equal keys.
  std::string key() const;

private:
  int base_ = -1;
  std::vector<Counts> counts_;
  std::array<EndpointMark, 2> ends_;
};

// Empty iff the NormalArc invariants hold w.r.t. t: matching counts across
// pairings, exactly two boundary endpoints consistent with the marks, a
// single connected strand path, non-interleaving types per piece, and
// essentiality.
std::vector<std::string> validate_normal_arc(const Triangulation& t, const NormalArc& a);

// Canonical (minimal position) form: endpoint corner wiggles removed,
// base-parallel arcs collapsed to base form. Returns nullopt when the class
// is inessential (it unravels into the boundary).
std::optional<NormalArc> try_canonicalize(const Triangulation& t, const NormalArc& a);
// Same, but throws rejected_input on inessential input.
NormalArc canonicalize(const Triangulation& t, const NormalArc& a);

// Equality of isotopy classes over the same base triangulation.
bool arcs_equal(const Triangulation& t, const NormalArc& a, const NormalArc& b);

// Crossings of a canonical arc with base arc `arc`.
std::uint32_t crossings_on_arc(const Triangulation& t, const NormalArc& a, int arc);

struct FlipMove;

// Coordinates of the same isotopy class w.r.t. the move's target. Throws
// undefined_transport when a is the flipped arc itself.
NormalArc transport(const NormalArc& a, const FlipMove& move);

struct StraightenResult {
  std::vector<FlipMove> moves;   // applied left to right to the base
  Triangulation target;          // final triangulation containing the arc
  int arc = -1;                  // its id there
};

// Flip sequence turning `a` into a triangulation arc; total crossing weight
// strictly decreases at every flip.
StraightenResult straighten(const Triangulation& t, const NormalArc& a);

// Geometric intersection number of two essential arcs over the same base.
std::uint32_t intersection_number(const Triangulation& t, const NormalArc& a, const NormalArc& b);

namespace normal_detail {

// One segment instance of a traced arc, entered through `in_side` (port
// position `in_pos` from that side's head) and left through `out_side`. The
// first step's in side and the last step's out side are boundary sides.
struct Step {
  int piece = -1;
  int type = -1;
  int in_side = -1, in_pos = -1;
  int out_side = -1, out_pos = -1;
};

struct Trace {
  std::vector<Step> steps;
  std::string diag;  // empty iff the arc traces to a single covering path
  bool ok() const { return diag.empty(); }
};

Trace trace_path(const Triangulation& t, const NormalArc& a);

} // namespace normal_detail

} // namespace arcc
