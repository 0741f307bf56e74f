#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "arcc/errors.hpp"

namespace arcc {

// A triangulation of a compact surface with boundary is stored as a gluing of
// hexagons. Each hexagon ("piece") has six cyclically ordered sides 0..5:
// even sides are arc sides, odd sides lie on the boundary of the surface.
// Side s runs from corner s (its tail) to corner s+1 mod 6 (its head), so the
// side order 0,1,...,5 is the piece's chosen boundary orientation.
//
// Arc slots are indexed globally: slot 3*piece + k is side 2k of that piece.
// A pairing identifies two arc slots; its reversal flag records whether the
// two sides are traversed in the same direction (parallel) or opposite
// directions (antiparallel) by their pieces' boundary orientations. Gluing
// two sides of one piece is allowed (non-embedded triangles); gluing a side
// to itself is not.

struct SurfaceSignature {
  int genus = 0;     // crosscap count when nonorientable, handle count otherwise
  int boundary = 0;  // number of boundary circles, r >= 1
  bool orientable = false;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
  }
  bool operator==(const SurfaceSignature&) const = default;
  std::string str() const;
};

enum class Reversal : unsigned char { parallel, antiparallel };

struct SlotRef {
  int piece = -1;
  int side = -1;  // even
  auto operator<=>(const SlotRef&) const = default;
};

struct PairingSpec {
  SlotRef a;
  SlotRef b;
  Reversal rev = Reversal::antiparallel;
};

class Triangulation {
public:
  Triangulation() = default;
  // Raw structure; may violate the invariants (validate_triangulation reports).
  // Throws rejected_input only for out-of-range slots or a slot used twice.
  Triangulation(int piece_count, const std::vector<PairingSpec>& pairings);

  int piece_count() const { return pieces_; }
  int arc_slot_count() const { return 3 * pieces_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  static int slot_index(int piece, int side) { return 3 * piece + side / 2; }
  static SlotRef slot_ref(int slot) { return {slot / 3, 2 * (slot % 3)}; }

  bool slot_paired(int slot) const { return partner_[slot] >= 0; }
  int partner(int slot) const { return partner_[slot]; }
  Reversal reversal(int slot) const { return rev_[slot]; }
  int arc_of_slot(int slot) const { return arc_of_[slot]; }
  // The two slots of an arc, smaller index first.
  const std::array<int, 2>& arc_slots(int arc) const { return arcs_[arc]; }
  bool self_paired(int arc) const {
    return arcs_[arc][0] / 3 == arcs_[arc][1] / 3;
  }
  std::vector<PairingSpec> pairings() const;

  bool operator==(const Triangulation&) const = default;

private:
  int pieces_ = 0;
  std::vector<int> partner_;     // per slot, -1 if unpaired
  std::vector<Reversal> rev_;    // per slot
  std::vector<int> arc_of_;      // per slot, -1 if unpaired
  std::vector<std::array<int, 2>> arcs_;
};

enum class PieceClass { embedded, regular_non_embedded, twisted_non_embedded };

std::string to_string(PieceClass c);
std::string to_string(Reversal r);

// One side label in a region boundary word. Arc labels carry which of the two
// copies of the cut arc this is; `reversed` means the walk traverses the side
// against its piece's orientation.
struct RegionSideLabel {
  bool is_arc = false;
  int arc = -1;
  int piece = -1;
  int side = -1;
  bool reversed = false;
  std::string str() const;
};

struct Region {
  std::vector<int> pieces;
  std::vector<std::vector<RegionSideLabel>> boundary_cycles;
  bool orientable = false;
  int euler = 0;
};

struct RegionReport {
  std::vector<Region> regions;
};

// Empty iff all Triangulation invariants hold; each violation names the
// offending piece/slot.
std::vector<std::string> validate_triangulation(const Triangulation& t);

// Signature from the gluing: euler characteristic #pieces - #arcs, boundary
// circles by corner-following, orientability by the piece sign system
// (antiparallel pairing forces equal signs, parallel forces opposite, a
// parallel self-pairing is unsatisfiable). Throws rejected_input when invalid.
SurfaceSignature classify_surface(const Triangulation& t);

// Deterministic triangulation with the requested signature. Throws
// unsupported_signature when no hexagon decomposition exists.
Triangulation build_surface(int genus, int boundary, bool orientable);

PieceClass classify_piece(const Triangulation& t, int piece);

// Cut along the arcs in `arcs`: pieces merge across every pairing whose arc is
// NOT in the subset. Reports each region's boundary word, orientability and
// euler characteristic.
RegionReport cut_along(const Triangulation& t, const std::vector<int>& arcs);

} // namespace arcc
