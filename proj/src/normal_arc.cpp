#include "arcc/normal_arc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace arcc {

namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }

struct TypeTables {
  int type_of[6][6];
  std::pair<int, int> sides_of[15];
  TypeTables() {
    int idx = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) type_of[i][j] = -1;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        type_of[i][j] = type_of[j][i] = idx;
        sides_of[idx] = {i, j};
        ++idx;
      }
  }
};
const TypeTables& tables() {
  static const TypeTables t;
  return t;
}

} // namespace

int segment_type(int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 5 || b > 5)
    throw rejected_input("invalid segment side pair");
  return tables().type_of[a][b];
}

std::pair<int, int> segment_sides(int type) {
  if (type < 0 || type >= 15) throw rejected_input("invalid segment type");
  return tables().sides_of[type];
}

bool sides_adjacent(int a, int b) { return mod6(a - b) == 1 || mod6(b - a) == 1; }

bool types_interleave(int ta, int tb) {
  auto [a, b] = segment_sides(ta);
  auto [c, d] = segment_sides(tb);
  auto strictly_between = [](int x, int lo, int hi) {
    // x in the open cyclic interval (lo, hi) walking lo -> hi by +1.
    for (int s = mod6(lo + 1); s != hi; s = mod6(s + 1))
      if (s == x) return true;
    return false;
  };
  bool c_in = strictly_between(c, a, b);
  bool d_in = strictly_between(d, a, b);
  return c_in != d_in;
}

NormalArc NormalArc::base(int arc) {
  NormalArc a;
  a.base_ = arc;
  return a;
}

NormalArc NormalArc::from_counts(std::vector<Counts> counts, std::array<EndpointMark, 2> ends) {
  NormalArc a;
  a.counts_ = std::move(counts);
  if (ends[1] < ends[0]) std::swap(ends[0], ends[1]);
  a.ends_ = ends;
  return a;
}

std::uint32_t NormalArc::side_load(int piece, int side) const {
  std::uint32_t m = 0;
  for (int o = 0; o < 6; ++o)
    if (o != side) m += counts_[piece][tables().type_of[side][o]];
  return m;
}

std::uint64_t NormalArc::total_weight() const {
  if (is_base()) return 0;
  std::uint64_t ports = 0;
  for (const auto& pc : counts_)
    for (int type = 0; type < 15; ++type) {
      if (!pc[type]) continue;
      auto [i, j] = tables().sides_of[type];
      int evens = (i % 2 == 0) + (j % 2 == 0);
      ports += static_cast<std::uint64_t>(pc[type]) * evens;
    }
  return ports / 2;
}

std::string NormalArc::key() const {
  std::ostringstream os;
  if (is_base()) {
    os << "B" << base_;
    return os.str();
  }
  os << "C";
  for (size_t p = 0; p < counts_.size(); ++p) {
    bool any = false;
    for (int type = 0; type < 15; ++type)
      if (counts_[p][type]) {
        if (!any) os << "|p" << p << ":";
        any = true;
        os << "t" << type << "x" << counts_[p][type] << ",";
      }
  }
  os << "|E";
  for (const auto& e : ends_) os << "(" << e.piece << "." << e.side << "." << e.rank << ")";
  return os.str();
}

namespace normal_detail {

namespace {

// Ordered ports along one side, from its head corner. Copies of a type are
// indexed along the lower-numbered side; disjointness forces the reversed
// order on the higher side.
std::vector<std::pair<int, int>> side_ports(const NormalArc& a, int piece, int side) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d <= 5; ++d) {
    int j = mod6(side + d);
    int type = tables().type_of[side][j];
    std::uint32_t c = a.count(piece, type);
    if (side < j) {
      for (std::uint32_t k = 0; k < c; ++k) out.push_back({type, static_cast<int>(k)});
    } else {
      for (std::uint32_t k = c; k-- > 0;) out.push_back({type, static_cast<int>(k)});
    }
  }
  return out;
}

int port_pos(const std::vector<std::pair<int, int>>& ports, int type, int copy) {
  for (size_t i = 0; i < ports.size(); ++i)
    if (ports[i] == std::make_pair(type, copy)) return static_cast<int>(i);
  return -1;
}

} // namespace

Trace trace_path(const Triangulation& t, const NormalArc& a) {
  Trace tr;
  if (a.is_base()) {
    tr.diag = "trace of base-arc form";
    return tr;
  }
  int P = t.piece_count();
  if (static_cast<int>(a.counts().size()) != P) {
    tr.diag = "counts sized for a different triangulation";
    return tr;
  }

  std::vector<std::array<std::vector<std::pair<int, int>>, 6>> ports(P);
  size_t total_segments = 0;
  for (int p = 0; p < P; ++p) {
    for (int s = 0; s < 6; ++s) ports[p][s] = side_ports(a, p, s);
    for (int type = 0; type < 15; ++type) total_segments += a.count(p, type);
  }
  if (total_segments == 0) {
    tr.diag = "no segments";
    return tr;
  }

  // Endpoints are exactly the ports on boundary (odd) sides.
  std::vector<std::tuple<int, int, int>> bports;
  for (int p = 0; p < P; ++p)
    for (int s = 1; s < 6; s += 2)
      for (size_t k = 0; k < ports[p][s].size(); ++k)
        bports.push_back({p, s, static_cast<int>(k)});
  if (bports.size() != 2) {
    tr.diag = "arc must have exactly 2 boundary endpoints, found " +
              std::to_string(bports.size());
    return tr;
  }

  std::set<std::tuple<int, int, int>> visited;  // (piece, type, copy)
  auto [p0, s0, k0] = bports.front();
  int piece = p0, side = s0, pos = k0;
  while (true) {
    auto [type, copy] = ports[piece][side][pos];
    if (visited.count({piece, type, copy})) {
      tr.diag = "strand revisits a segment (cycle)";
      return tr;
    }
    visited.insert({piece, type, copy});
    auto [i, j] = tables().sides_of[type];
    int other = (i == side) ? j : i;
    Step step;
    step.piece = piece;
    step.type = type;
    step.in_side = side;
    step.in_pos = pos;
    step.out_side = other;
    step.out_pos = port_pos(ports[piece][other], type, copy);
    tr.steps.push_back(step);
    if (other % 2 == 1) break;  // reached the far endpoint

    int slot = Triangulation::slot_index(piece, other);
    if (!t.slot_paired(slot)) {
      tr.diag = "strand crosses an unpaired slot";
      return tr;
    }
    int pslot = t.partner(slot);
    SlotRef o = Triangulation::slot_ref(pslot);
    std::uint32_t m = a.side_load(piece, other);
    std::uint32_t m2 = a.side_load(o.piece, o.side);
    if (m != m2) {
      tr.diag = "mismatched counts across a pairing";
      return tr;
    }
    int x = step.out_pos;
    int y = (t.reversal(slot) == Reversal::antiparallel) ? static_cast<int>(m) - 1 - x : x;
    piece = o.piece;
    side = o.side;
    pos = y;
  }
  if (visited.size() != total_segments) {
    tr.diag = "disconnected: " + std::to_string(total_segments - visited.size()) +
              " segment(s) not on the endpoint path";
    return tr;
  }
  return tr;
}

} // namespace normal_detail

std::vector<std::string> validate_normal_arc(const Triangulation& t, const NormalArc& a) {
  std::vector<std::string> diags;
  if (a.is_base()) {
    if (a.base_arc() < 0 || a.base_arc() >= t.arc_count())
      diags.push_back("base arc id out of range");
    return diags;
  }
  int P = t.piece_count();
  if (static_cast<int>(a.counts().size()) != P) {
    diags.push_back("counts sized for a different triangulation");
    return diags;
  }

  for (int p = 0; p < P; ++p)
    for (int ta = 0; ta < 15; ++ta)
      for (int tb = ta + 1; tb < 15; ++tb)
        if (a.count(p, ta) && a.count(p, tb) && types_interleave(ta, tb)) {
          std::ostringstream os;
          os << "interleaving segment types " << ta << " and " << tb << " in piece " << p;
          diags.push_back(os.str());
        }

  for (int arc = 0; arc < t.arc_count(); ++arc) {
    auto [s1, s2] = t.arc_slots(arc);
    SlotRef r1 = Triangulation::slot_ref(s1), r2 = Triangulation::slot_ref(s2);
    if (a.side_load(r1.piece, r1.side) != a.side_load(r2.piece, r2.side)) {
      std::ostringstream os;
      os << "matching violation across arc " << arc;
      diags.push_back(os.str());
    }
  }

  std::uint32_t bports = 0;
  for (int p = 0; p < P; ++p)
    for (int s = 1; s < 6; s += 2) bports += a.side_load(p, s);
  if (bports != 2) {
    diags.push_back("expected exactly 2 boundary endpoints, found " + std::to_string(bports));
  }
  if (!diags.empty()) return diags;

  auto tr = normal_detail::trace_path(t, a);
  if (!tr.ok()) {
    diags.push_back(tr.diag);
    return diags;
  }

  // Endpoint marks must be the two boundary ports of the trace.
  std::array<EndpointMark, 2> expect = {
      EndpointMark{tr.steps.front().piece, tr.steps.front().in_side, tr.steps.front().in_pos},
      EndpointMark{tr.steps.back().piece, tr.steps.back().out_side, tr.steps.back().out_pos}};
  if (expect[1] < expect[0]) std::swap(expect[0], expect[1]);
  if (expect != a.endpoints()) diags.push_back("endpoint marks inconsistent with counts");

  if (!try_canonicalize(t, a).has_value())
    diags.push_back("inessential arc (isotopic into the boundary)");
  return diags;
}

std::optional<NormalArc> try_canonicalize(const Triangulation& t, const NormalArc& a) {
  if (a.is_base()) return a;
  std::vector<NormalArc::Counts> counts = a.counts();
  std::array<EndpointMark, 2> ends = a.endpoints();

  auto current = [&]() { return NormalArc::from_counts(counts, ends); };

  while (true) {
    auto tr = normal_detail::trace_path(t, current());
    if (!tr.ok()) throw internal_error("canonicalize on malformed arc: " + tr.diag);

    if (tr.steps.size() == 1) {
      const auto& st = tr.steps.front();
      // Single boundary-to-boundary segment: parallel to the arc side it
      // cuts off.
      int b1 = st.in_side, b2 = st.out_side;
      for (int e = 0; e < 6; e += 2) {
        if ((mod6(e + 1) == b1 && mod6(e - 1) == b2) ||
            (mod6(e + 1) == b2 && mod6(e - 1) == b1)) {
          int slot = Triangulation::slot_index(st.piece, e);
          return NormalArc::base(t.arc_of_slot(slot));
        }
      }
      throw internal_error("single segment without a cut-off side");
    }

    // Wiggle at the start: first segment crosses an arc side adjacent to its
    // endpoint's boundary side; the endpoint slides across the shared corner.
    auto remove_wiggle = [&](bool at_start) -> std::optional<bool> {
      const auto& end_step = at_start ? tr.steps.front() : tr.steps.back();
      const auto& next_step = at_start ? tr.steps[1] : tr.steps[tr.steps.size() - 2];
      int b = at_start ? end_step.in_side : end_step.out_side;
      int x = at_start ? end_step.out_side : end_step.in_side;
      if (!sides_adjacent(b, x)) return false;

      int p = end_step.piece;
      int slot = Triangulation::slot_index(p, x);
      bool anti = (t.reversal(slot) == Reversal::antiparallel);
      int q = next_step.piece;
      int xp = at_start ? next_step.in_side : next_step.out_side;
      int y = at_start ? next_step.out_side : next_step.in_side;
      // Corner of x hugged by the wiggle, carried through the gluing.
      bool at_head_of_x = (mod6(x + 1) == b);
      bool lands_at_head_of_xp = anti ? !at_head_of_x : at_head_of_x;
      int bstar = lands_at_head_of_xp ? mod6(xp + 1) : mod6(xp - 1);
      if (y == bstar) return std::nullopt;  // unravels completely: inessential

      counts[p][segment_type(b, x)] -= 1;
      counts[q][segment_type(xp, y)] -= 1;
      counts[q][segment_type(y, bstar)] += 1;
      return true;
    };

    auto r0 = remove_wiggle(true);
    if (!r0.has_value()) return std::nullopt;
    if (*r0) continue;
    auto r1 = remove_wiggle(false);
    if (!r1.has_value()) return std::nullopt;
    if (*r1) continue;

    // Minimal position reached; refresh endpoint marks from the trace.
    std::array<EndpointMark, 2> marks = {
        EndpointMark{tr.steps.front().piece, tr.steps.front().in_side, tr.steps.front().in_pos},
        EndpointMark{tr.steps.back().piece, tr.steps.back().out_side, tr.steps.back().out_pos}};
    return NormalArc::from_counts(counts, marks);
  }
}

NormalArc canonicalize(const Triangulation& t, const NormalArc& a) {
  auto c = try_canonicalize(t, a);
  if (!c) throw rejected_input("inessential arc");
  return *c;
}

bool arcs_equal(const Triangulation& t, const NormalArc& a, const NormalArc& b) {
  return canonicalize(t, a) == canonicalize(t, b);
}

std::uint32_t crossings_on_arc(const Triangulation& t, const NormalArc& a, int arc) {
  if (arc < 0 || arc >= t.arc_count()) throw rejected_input("unknown arc id");
  if (a.is_base()) return 0;
  SlotRef r = Triangulation::slot_ref(t.arc_slots(arc)[0]);
  return a.side_load(r.piece, r.side);
}

} // namespace arcc
