#include "arcc/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace arcc {

namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }

// Union-find with parity for the orientation sign system.
struct SignedDsu {
  std::vector<int> parent;
  std::vector<char> parity;  // parity to parent
  bool consistent = true;

  explicit SignedDsu(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, char> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] = static_cast<char>(parity[x] ^ p);
    return {r, parity[x]};
  }
  // relation: sign(a) differs from sign(b) iff diff.
  void unite(int a, int b, bool diff) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != static_cast<char>(diff)) consistent = false;
      return;
    }
    parent[ra] = rb;
    parity[ra] = static_cast<char>(pa ^ pb ^ static_cast<char>(diff));
  }
};

struct PlainDsu {
  std::vector<int> parent;
  explicit PlainDsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Walk state while following a region boundary: a side of a piece and a
// direction (true = along the piece's orientation).
struct WalkState {
  int piece;
  int side;
  bool fwd;
  auto operator<=>(const WalkState&) const = default;
};

// One boundary-following step. Sides in `cut` (arc ids) and odd sides count as
// boundary of the region; other arc sides are glued. Crossing a glued side:
// the corner identification follows the reversal flag (antiparallel matches
// head to tail, parallel matches head to head).
WalkState walk_step(const Triangulation& t, const std::set<int>& cut, WalkState s) {
  int next_side = s.fwd ? mod6(s.side + 1) : mod6(s.side - 1);
  bool boundaryish = (next_side % 2 == 1);
  if (!boundaryish) {
    int slot = Triangulation::slot_index(s.piece, next_side);
    if (!t.slot_paired(slot) || cut.count(t.arc_of_slot(slot))) boundaryish = true;
  }
  if (boundaryish) return {s.piece, next_side, s.fwd};

  int slot = Triangulation::slot_index(s.piece, next_side);
  int pslot = t.partner(slot);
  SlotRef other = Triangulation::slot_ref(pslot);
  bool anti = (t.reversal(slot) == Reversal::antiparallel);
  if (s.fwd) {
    // Entered the glued side at its tail corner.
    if (anti) return {other.piece, mod6(other.side + 1), true};
    return {other.piece, mod6(other.side - 1), false};
  }
  // Entered at the head corner.
  if (anti) return {other.piece, mod6(other.side - 1), false};
  return {other.piece, mod6(other.side + 1), true};
}

// All directed boundary cycles over the effective-boundary sides. Each
// geometric circle appears twice (once per direction).
std::vector<std::vector<WalkState>> directed_boundary_cycles(const Triangulation& t,
                                                             const std::set<int>& cut,
                                                             const std::vector<int>& pieces) {
  std::set<WalkState> seen;
  std::vector<std::vector<WalkState>> cycles;
  for (int p : pieces) {
    for (int side = 0; side < 6; ++side) {
      bool boundaryish = (side % 2 == 1);
      if (!boundaryish) {
        int slot = Triangulation::slot_index(p, side);
        if (!t.slot_paired(slot) || cut.count(t.arc_of_slot(slot))) boundaryish = true;
      }
      if (!boundaryish) continue;
      for (bool fwd : {true, false}) {
        WalkState start{p, side, fwd};
        if (seen.count(start)) continue;
        std::vector<WalkState> cyc;
        WalkState cur = start;
        do {
          cyc.push_back(cur);
          seen.insert(cur);
          cur = walk_step(t, cut, cur);
        } while (cur != start);
        cycles.push_back(std::move(cyc));
      }
    }
  }
  return cycles;
}

// Keep one direction per circle: the lexicographically smaller of a cycle and
// its reverse, keyed by the smallest state it contains.
std::vector<std::vector<WalkState>> undirected_boundary_cycles(const Triangulation& t,
                                                               const std::set<int>& cut,
                                                               const std::vector<int>& pieces) {
  auto all = directed_boundary_cycles(t, cut, pieces);
  std::map<WalkState, const std::vector<WalkState>*> by_min;
  for (const auto& c : all) {
    WalkState m = *std::min_element(c.begin(), c.end());
    auto it = by_min.find(m);
    if (it == by_min.end() || c < *it->second) by_min[m] = &c;
  }
  // A cycle and its reverse never share a state (they use opposite
  // directions), so pair them by the underlying undirected side set.
  std::vector<std::vector<WalkState>> out;
  std::set<std::vector<WalkState>> taken;
  for (auto& [m, c] : by_min) {
    std::vector<WalkState> undirected;
    for (auto s : *c) undirected.push_back({s.piece, s.side, true});
    std::sort(undirected.begin(), undirected.end());
    if (taken.count(undirected)) continue;
    taken.insert(undirected);
    out.push_back(*c);
  }
  return out;
}

} // namespace

std::string SurfaceSignature::str() const {
  std::ostringstream os;
  os << "(" << genus << "," << boundary << "," << (orientable ? "orientable" : "nonorientable")
     << ")";
  return os.str();
}

std::string to_string(PieceClass c) {
  switch (c) {
    case PieceClass::embedded: return "Embedded";
    case PieceClass::regular_non_embedded: return "RegularNonEmbedded";
    case PieceClass::twisted_non_embedded: return "TwistedNonEmbedded";
  }
  return "?";
}

std::string to_string(Reversal r) {
  return r == Reversal::parallel ? "parallel" : "antiparallel";
}

std::string RegionSideLabel::str() const {
  std::ostringstream os;
  if (is_arc)
    os << "a" << arc << (reversed ? "-" : "+");
  else
    os << "b(" << piece << "." << side << ")";
  return os.str();
}

Triangulation::Triangulation(int piece_count, const std::vector<PairingSpec>& pairings)
    : pieces_(piece_count),
      partner_(3 * piece_count, -1),
      rev_(3 * piece_count, Reversal::antiparallel),
      arc_of_(3 * piece_count, -1) {
  if (piece_count < 0) throw rejected_input("negative piece count");
  auto check = [&](SlotRef s) {
    if (s.piece < 0 || s.piece >= piece_count || s.side < 0 || s.side >= 6 || s.side % 2 != 0)
      throw rejected_input("pairing references invalid arc slot");
  };
  for (const auto& p : pairings) {
    check(p.a);
    check(p.b);
    int ia = slot_index(p.a.piece, p.a.side);
    int ib = slot_index(p.b.piece, p.b.side);
    if (ia == ib) throw rejected_input("arc slot paired with itself");
    if (partner_[ia] != -1 || partner_[ib] != -1)
      throw rejected_input("arc slot used in two pairings");
    partner_[ia] = ib;
    partner_[ib] = ia;
    rev_[ia] = rev_[ib] = p.rev;
  }
  // Arc ids in increasing order of their smaller slot.
  for (int s = 0; s < 3 * piece_count; ++s) {
    if (partner_[s] > s) {
      arc_of_[s] = arc_of_[partner_[s]] = static_cast<int>(arcs_.size());
      arcs_.push_back({s, partner_[s]});
    }
  }
}

std::vector<PairingSpec> Triangulation::pairings() const {
  std::vector<PairingSpec> out;
  for (const auto& a : arcs_)
    out.push_back({slot_ref(a[0]), slot_ref(a[1]), rev_[a[0]]});
  return out;
}

std::vector<std::string> validate_triangulation(const Triangulation& t) {
  std::vector<std::string> diags;
  int P = t.piece_count();
  if (P == 0) {
    diags.push_back("empty triangulation");
    return diags;
  }
  for (int s = 0; s < t.arc_slot_count(); ++s) {
    if (!t.slot_paired(s)) {
      SlotRef r = Triangulation::slot_ref(s);
      std::ostringstream os;
      os << "unpaired arc slot: piece " << r.piece << " side " << r.side;
      diags.push_back(os.str());
    }
  }
  if (!diags.empty()) return diags;

  if (P % 2 != 0) diags.push_back("odd piece count");

  PlainDsu dsu(P);
  for (int s = 0; s < t.arc_slot_count(); ++s)
    dsu.unite(s / 3, t.partner(s) / 3);
  std::set<int> comps;
  for (int p = 0; p < P; ++p) comps.insert(dsu.find(p));
  if (comps.size() > 1) {
    std::ostringstream os;
    os << "glued surface is disconnected (" << comps.size() << " components)";
    diags.push_back(os.str());
  }
  return diags;
}

SurfaceSignature classify_surface(const Triangulation& t) {
  auto diags = validate_triangulation(t);
  if (!diags.empty()) throw rejected_input("invalid triangulation: " + diags.front());

  int P = t.piece_count();
  int A = t.arc_count();
  int chi = P - A;

  SignedDsu dsu(P);
  bool orientable = true;
  for (int arc = 0; arc < A; ++arc) {
    auto [s1, s2] = t.arc_slots(arc);
    bool parallel = (t.reversal(s1) == Reversal::parallel);
    if (s1 / 3 == s2 / 3) {
      if (parallel) orientable = false;  // Moebius self-gluing
      continue;
    }
    dsu.unite(s1 / 3, s2 / 3, parallel);
  }
  if (!dsu.consistent) orientable = false;

  std::vector<int> all_pieces(P);
  std::iota(all_pieces.begin(), all_pieces.end(), 0);
  int r = static_cast<int>(undirected_boundary_cycles(t, {}, all_pieces).size());

  SurfaceSignature sig;
  sig.boundary = r;
  sig.orientable = orientable;
  if (orientable) {
    int twog = 2 - r - chi;
    if (twog < 0 || twog % 2 != 0)
      throw internal_error("orientable gluing with non-integer genus");
    sig.genus = twog / 2;
  } else {
    sig.genus = 2 - r - chi;
  }
  return sig;
}

PieceClass classify_piece(const Triangulation& t, int piece) {
  if (piece < 0 || piece >= t.piece_count()) throw rejected_input("unknown piece id");
  for (int k = 0; k < 3; ++k) {
    int slot = 3 * piece + k;
    if (!t.slot_paired(slot)) throw rejected_input("piece has unpaired slot");
    if (t.partner(slot) / 3 == piece) {
      return t.reversal(slot) == Reversal::antiparallel ? PieceClass::regular_non_embedded
                                                        : PieceClass::twisted_non_embedded;
    }
  }
  return PieceClass::embedded;
}

RegionReport cut_along(const Triangulation& t, const std::vector<int>& arcs) {
  auto diags = validate_triangulation(t);
  if (!diags.empty()) throw rejected_input("invalid triangulation: " + diags.front());
  std::set<int> cut;
  for (int a : arcs) {
    if (a < 0 || a >= t.arc_count()) throw rejected_input("unknown arc id in cut set");
    cut.insert(a);
  }

  int P = t.piece_count();
  PlainDsu dsu(P);
  for (int arc = 0; arc < t.arc_count(); ++arc) {
    if (cut.count(arc)) continue;
    auto [s1, s2] = t.arc_slots(arc);
    dsu.unite(s1 / 3, s2 / 3);
  }
  std::map<int, std::vector<int>> comp_pieces;
  for (int p = 0; p < P; ++p) comp_pieces[dsu.find(p)].push_back(p);

  RegionReport report;
  for (auto& [root, pieces] : comp_pieces) {
    Region reg;
    reg.pieces = pieces;
    int internal = 0;
    SignedDsu signs(P);
    bool orientable = true;
    for (int arc = 0; arc < t.arc_count(); ++arc) {
      if (cut.count(arc)) continue;
      auto [s1, s2] = t.arc_slots(arc);
      if (dsu.find(s1 / 3) != root) continue;
      ++internal;
      bool parallel = (t.reversal(s1) == Reversal::parallel);
      if (s1 / 3 == s2 / 3) {
        if (parallel) orientable = false;
        continue;
      }
      signs.unite(s1 / 3, s2 / 3, parallel);
    }
    if (!signs.consistent) orientable = false;
    reg.orientable = orientable;
    reg.euler = static_cast<int>(pieces.size()) - internal;

    for (const auto& cyc : undirected_boundary_cycles(t, cut, pieces)) {
      std::vector<RegionSideLabel> word;
      for (const auto& s : cyc) {
        RegionSideLabel lab;
        lab.piece = s.piece;
        lab.side = s.side;
        lab.reversed = !s.fwd;
        if (s.side % 2 == 0) {
          lab.is_arc = true;
          lab.arc = t.arc_of_slot(Triangulation::slot_index(s.piece, s.side));
        }
        word.push_back(lab);
      }
      reg.boundary_cycles.push_back(std::move(word));
    }
    report.regions.push_back(std::move(reg));
  }
  return report;
}

namespace {

// Fan triangulation of a one-vertex polygon word. Each word entry is
// (letter, forward?) along the perimeter; every letter appears exactly twice.
Triangulation polygon_fan(const std::vector<std::pair<int, bool>>& word) {
  int n = static_cast<int>(word.size());
  if (n < 3) throw internal_error("polygon too small to fan");
  int tris = n - 2;

  // Edge descriptors per triangle side: polygon side i >= 0, diagonal -(m+1)
  // for the fan diagonal (0,m). dir = traversed forward along the descriptor.
  struct Side {
    int edge;
    bool dir;
  };
  std::vector<std::array<Side, 3>> tri(tris);
  for (int m = 1; m <= n - 2; ++m) {
    Side first = (m == 1) ? Side{0, true} : Side{-(m + 1), true};
    Side second = {m, true};
    Side third = (m + 1 == n - 1) ? Side{n - 1, true} : Side{-(m + 2), false};
    tri[m - 1] = {first, second, third};
  }

  std::map<int, std::vector<std::pair<SlotRef, bool>>> occurrences;
  for (int k = 0; k < tris; ++k)
    for (int j = 0; j < 3; ++j) {
      const Side& s = tri[k][j];
      int key = s.edge >= 0 ? word[s.edge].first : s.edge;
      bool dir = s.dir;
      if (s.edge >= 0 && !word[s.edge].second) dir = !dir;
      occurrences[key].push_back({SlotRef{k, 2 * j}, dir});
    }

  std::vector<PairingSpec> pairings;
  for (auto& [key, occ] : occurrences) {
    if (occ.size() != 2) throw internal_error("polygon word letter count != 2");
    Reversal rev = (occ[0].second == occ[1].second) ? Reversal::parallel : Reversal::antiparallel;
    pairings.push_back({occ[0].first, occ[1].first, rev});
  }
  return Triangulation(tris, pairings);
}

// Add one boundary circle: replace `piece` by three hexagons around a new
// boundary circle. Piece `piece` keeps its index; the other two are appended.
Triangulation puncture_split(const Triangulation& t, int piece) {
  int P = t.piece_count();
  std::array<int, 3> np = {piece, P, P + 1};
  auto remap = [&](SlotRef s) -> SlotRef {
    if (s.piece != piece) return s;
    return {np[s.side / 2], 0};
  };
  std::vector<PairingSpec> pairings;
  for (const auto& pr : t.pairings())
    pairings.push_back({remap(pr.a), remap(pr.b), pr.rev});
  for (int i = 0; i < 3; ++i)
    pairings.push_back({{np[i], 2}, {np[(i + 1) % 3], 4}, Reversal::antiparallel});
  return Triangulation(P + 2, pairings);
}

Triangulation base_nonorientable_12() {
  // Two hexagons: a parallel self-gluing (Moebius piece), a bridge arc, and an
  // antiparallel self-gluing (annulus piece). Gives (1,2) nonorientable.
  std::vector<PairingSpec> pairings = {
      {{0, 0}, {0, 2}, Reversal::parallel},
      {{0, 4}, {1, 0}, Reversal::antiparallel},
      {{1, 2}, {1, 4}, Reversal::antiparallel},
  };
  return Triangulation(2, pairings);
}

Triangulation base_orientable_03() {
  // Pair of pants from two mirrored hexagons.
  std::vector<PairingSpec> pairings = {
      {{0, 0}, {1, 0}, Reversal::antiparallel},
      {{0, 2}, {1, 4}, Reversal::antiparallel},
      {{0, 4}, {1, 2}, Reversal::antiparallel},
  };
  return Triangulation(2, pairings);
}

} // namespace

Triangulation build_surface(int genus, int boundary, bool orientable) {
  int r = boundary;
  if (r < 1) throw unsupported_signature("boundary count must be >= 1");
  int arcs = orientable ? 6 * genus + 3 * r - 6 : 3 * genus + 3 * r - 6;
  if (!orientable && genus < 1)
    throw unsupported_signature("nonorientable surfaces need genus >= 1");
  if (orientable && genus < 0) throw unsupported_signature("negative genus");
  if (arcs < 3) {
    throw unsupported_signature("signature " + SurfaceSignature{genus, r, orientable}.str() +
                                " admits no hexagon decomposition; use explicit_small_model");
  }

  Triangulation t;
  int splits = 0;
  if (!orientable) {
    if (genus == 1) {
      t = base_nonorientable_12();
      splits = r - 2;
    } else {
      std::vector<std::pair<int, bool>> word;
      for (int g = 0; g < genus; ++g) {
        word.push_back({g, true});
        word.push_back({g, true});
      }
      t = polygon_fan(word);
      splits = r - 1;
    }
  } else {
    if (genus == 0) {
      t = base_orientable_03();
      splits = r - 3;
    } else {
      std::vector<std::pair<int, bool>> word;
      for (int g = 0; g < genus; ++g) {
        word.push_back({2 * g, true});
        word.push_back({2 * g + 1, true});
        word.push_back({2 * g, false});
        word.push_back({2 * g + 1, false});
      }
      t = polygon_fan(word);
      splits = r - 1;
    }
  }
  for (int i = 0; i < splits; ++i) t = puncture_split(t, 0);
  return t;
}

} // namespace arcc
