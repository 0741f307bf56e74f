#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "arcc/flip.hpp"

namespace arcc {

// A finite induced piece of the arc complex. Engine windows come from a flip
// graph ball (vertices are canonical root-coordinate arcs, one maximal
// simplex per ball node); explicit models are symbolic.
struct ComplexWindow {
  std::vector<NormalArc> vertex_arcs;      // engine windows only
  std::vector<std::string> vertex_keys;    // canonical key / symbolic label
  std::vector<std::string> vertex_labels;
  std::vector<char> interior;              // per vertex: link fully inside the window
  std::vector<std::vector<int>> max_simplices;  // sorted vertex ids
  bool complete = false;  // whole (finite) complex, not a truncation
  bool symbolic = false;
  int top_size = 0;       // vertices per maximal simplex
  std::shared_ptr<const FlipGraphBall> ball;  // engine windows only

  int vertex_count() const { return static_cast<int>(vertex_keys.size()); }
  int vertex_by_key(const std::string& key) const;
  std::vector<std::set<int>> adjacency() const;
  int degree(int v) const;
};

struct SimplicialMap {
  std::vector<int> assignment;  // source vertex -> target vertex
  bool simplicial = false;
  bool injective = false;
};

// Recompute the flags for a total vertex assignment.
SimplicialMap validate_map(const ComplexWindow& src, const ComplexWindow& dst,
                           std::vector<int> assignment);

// Window of the arc complex from a radius-limited flip graph ball.
ComplexWindow build_complex(int genus, int boundary, bool orientable, int radius,
                            const BallLimits& limits = {});

enum class SmallCase { n11, n12, n21 };

// (1,1): the one-vertex complex. (1,2): the engine's stabilized complex.
// (2,1): the symbolic window with vertices a, b_n (|n| <= k), c_n
// (-k <= n < k) and maximal simplices {a,b_n,b_n+1}, {b_n,b_n+1,c_n}.
ComplexWindow explicit_small_model(SmallCase c, int k = 6);

// The (2,1) model over an arbitrary b-index interval [b_lo, b_hi].
ComplexWindow small_model_21_strip(int b_lo, int b_hi);

struct LinkReport {
  int degree = 0;
  std::vector<int> link_vertices;
  std::vector<std::vector<int>> link_simplices;  // maximal faces of the link
  bool trusted = false;
};

LinkReport vertex_degree_and_link(const ComplexWindow& w, int v);

// Exhaustive backtracking over injective vertex maps sending every simplex
// into a simplex. Requires a complete window.
std::vector<SimplicialMap> enumerate_injective_endomorphisms(const ComplexWindow& w);

enum class GroupName { trivial, z2, z2xz2, z4, d4, z_semi_z2, unknown };
std::string to_string(GroupName n);

struct GroupInvariants {
  bool infinite = false;
  long long order = 0;
  bool abelian = false;
  long long exponent = 0;
  bool dihedral_relation = false;          // order 8: s,t with t^2=1, tst=s^-1, s order 4
  bool shift_reflection_inversion = false; // infinite: t^2=1, tst = s^-1 for a shift s
};

GroupName identify_group(const GroupInvariants& inv);

struct GroupReport {
  GroupInvariants invariants;
  std::vector<std::string> generators;
  GroupName name = GroupName::unknown;
  std::vector<SimplicialMap> elements;  // finite mode
};

// Finite windows: all simplicial bijections with simplicial inverse.
// Symbolic (2,1) windows: verifies the shift and reflection rules and reports
// the infinite dihedral group.
GroupReport automorphism_group(const ComplexWindow& w);

// Symmetry of a gluing structure: pieces permuted, sides mapped by dihedral
// maps x -> sign*x + offset (offset even), commuting with pairing and
// reversal.
struct GluingSymmetry {
  std::vector<int> piece_image;
  std::vector<int> sign;    // +1 / -1 per piece
  std::vector<int> offset;  // even, per piece
  int map_side(int piece, int side) const;
};

std::vector<GluingSymmetry> gluing_symmetries(const Triangulation& t);
GluingSymmetry compose(const Triangulation& t, const GluingSymmetry& f, const GluingSymmetry& g);
bool is_gluing_symmetry(const Triangulation& t, const GluingSymmetry& s);

NormalArc apply_symmetry(const Triangulation& t, const GluingSymmetry& s, const NormalArc& a);

// Vertex map of a window induced by a base-gluing symmetry.
SimplicialMap induced_map(const GluingSymmetry& sym, const ComplexWindow& w);

} // namespace arcc
