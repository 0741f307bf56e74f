#include "arcc/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace arcc {

namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

int ComplexWindow::vertex_by_key(const std::string& key) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_keys[i] == key) return i;
  return -1;
}

std::vector<std::set<int>> ComplexWindow::adjacency() const {
  std::vector<std::set<int>> adj(vertex_count());
  for (const auto& s : max_simplices)
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) {
        adj[s[i]].insert(s[j]);
        adj[s[j]].insert(s[i]);
      }
  return adj;
}

int ComplexWindow::degree(int v) const {
  if (v < 0 || v >= vertex_count()) throw rejected_input("unknown vertex");
  return static_cast<int>(adjacency()[v].size());
}

SimplicialMap validate_map(const ComplexWindow& src, const ComplexWindow& dst,
                           std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != src.vertex_count())
    throw rejected_input("assignment not total on source vertices");
  for (int v : assignment)
    if (v < 0 || v >= dst.vertex_count()) throw rejected_input("assignment out of range");

  SimplicialMap m;
  m.assignment = std::move(assignment);
  std::set<int> image(m.assignment.begin(), m.assignment.end());
  m.injective = static_cast<int>(image.size()) == src.vertex_count();

  m.simplicial = true;
  for (const auto& s : src.max_simplices) {
    std::vector<int> img;
    for (int v : s) img.push_back(m.assignment[v]);
    img = sorted_unique(std::move(img));
    bool inside = false;
    for (const auto& tsx : dst.max_simplices) {
      if (std::includes(tsx.begin(), tsx.end(), img.begin(), img.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      m.simplicial = false;
      break;
    }
  }
  return m;
}

ComplexWindow build_complex(int genus, int boundary, bool orientable, int radius,
                            const BallLimits& limits) {
  Triangulation root = build_surface(genus, boundary, orientable);
  auto ball = std::make_shared<FlipGraphBall>(flip_graph_ball(root, radius, limits));

  ComplexWindow w;
  w.ball = ball;
  w.top_size = root.arc_count();
  w.complete = ball->stabilized;

  std::map<std::string, int> by_key;
  for (const auto& node : ball->nodes) {
    std::vector<int> simplex;
    for (int a = 0; a < static_cast<int>(node.arc_keys.size()); ++a) {
      auto it = by_key.find(node.arc_keys[a]);
      int v;
      if (it == by_key.end()) {
        v = w.vertex_count();
        by_key[node.arc_keys[a]] = v;
        w.vertex_keys.push_back(node.arc_keys[a]);
        w.vertex_arcs.push_back(node.arcs_root[a]);
        w.vertex_labels.push_back("v" + std::to_string(v));
      } else {
        v = it->second;
      }
      simplex.push_back(v);
    }
    std::sort(simplex.begin(), simplex.end());
    if (static_cast<int>(simplex.size()) != w.top_size)
      throw internal_error("ball node with duplicate arcs");
    w.max_simplices.push_back(std::move(simplex));
  }

  // Interiority: a vertex is interior when every triangulation containing it
  // that is one flip from a known node lies in the window. Expanded nodes'
  // flips are all in the ball; frontier probes cover the rest.
  w.interior.assign(w.vertex_count(), 1);
  if (ball->truncated) {
    std::fill(w.interior.begin(), w.interior.end(), 0);
  } else {
    for (const auto& probe : ball->probes) {
      if (probe.in_ball) continue;
      const BallNode& n = ball->nodes[probe.node];
      for (int a = 0; a < static_cast<int>(n.arc_keys.size()); ++a) {
        if (a == probe.arc) continue;
        w.interior[by_key.at(n.arc_keys[a])] = 0;
      }
      auto it = by_key.find(probe.new_arc_key);
      if (it != by_key.end()) w.interior[it->second] = 0;
    }
  }
  return w;
}

ComplexWindow small_model_21_strip(int b_lo, int b_hi) {
  if (b_hi - b_lo < 1) throw rejected_input("strip needs at least two b vertices");
  ComplexWindow w;
  w.symbolic = true;
  w.complete = false;
  w.top_size = 3;

  std::map<std::string, int> ids;
  auto add = [&](const std::string& label, bool inter) {
    ids[label] = w.vertex_count();
    w.vertex_keys.push_back(label);
    w.vertex_labels.push_back(label);
    w.interior.push_back(inter ? 1 : 0);
    return ids[label];
  };
  auto bname = [](int n) { return "b_" + std::to_string(n); };
  auto cname = [](int n) { return "c_" + std::to_string(n); };

  add("a", false);
  for (int n = b_lo; n <= b_hi; ++n) add(bname(n), n > b_lo && n < b_hi);
  for (int n = b_lo; n < b_hi; ++n) add(cname(n), true);

  for (int n = b_lo; n < b_hi; ++n) {
    std::vector<int> alpha = {ids.at("a"), ids.at(bname(n)), ids.at(bname(n + 1))};
    std::vector<int> beta = {ids.at(bname(n)), ids.at(bname(n + 1)), ids.at(cname(n))};
    std::sort(alpha.begin(), alpha.end());
    std::sort(beta.begin(), beta.end());
    w.max_simplices.push_back(alpha);
    w.max_simplices.push_back(beta);
  }
  return w;
}

ComplexWindow explicit_small_model(SmallCase c, int k) {
  switch (c) {
    case SmallCase::n11: {
      ComplexWindow w;
      w.symbolic = true;
      w.complete = true;
      w.top_size = 1;
      w.vertex_keys = {"a"};
      w.vertex_labels = {"a"};
      w.interior = {1};
      w.max_simplices = {{0}};
      return w;
    }
    case SmallCase::n12: {
      ComplexWindow w = build_complex(1, 2, false, 32);
      if (!w.complete) throw internal_error("the (1,2) complex failed to stabilize");
      return w;
    }
    case SmallCase::n21:
      return small_model_21_strip(-k, k);
  }
  throw rejected_input("unknown small case");
}

LinkReport vertex_degree_and_link(const ComplexWindow& w, int v) {
  if (v < 0 || v >= w.vertex_count()) throw rejected_input("unknown vertex");
  LinkReport rep;
  auto adj = w.adjacency();
  rep.link_vertices.assign(adj[v].begin(), adj[v].end());
  rep.degree = static_cast<int>(rep.link_vertices.size());
  for (const auto& s : w.max_simplices) {
    if (!std::binary_search(s.begin(), s.end(), v)) continue;
    std::vector<int> face;
    for (int u : s)
      if (u != v) face.push_back(u);
    rep.link_simplices.push_back(std::move(face));
  }
  rep.trusted = w.interior[v] != 0;
  return rep;
}

namespace {

struct SimplexTable {
  std::vector<std::vector<int>> simplices;  // sorted
  bool contains_subset(const std::vector<int>& sorted_sub) const {
    for (const auto& s : simplices)
      if (std::includes(s.begin(), s.end(), sorted_sub.begin(), sorted_sub.end())) return true;
    return false;
  }
  bool contains_exact(const std::vector<int>& sorted_set) const {
    for (const auto& s : simplices)
      if (s == sorted_set) return true;
    return false;
  }
};

// Backtracking over injective assignments; `exact` demands that images of
// maximal simplices are maximal (automorphism search).
void search_injective(const ComplexWindow& w, bool exact, std::vector<SimplicialMap>& out) {
  int n = w.vertex_count();
  auto adj = w.adjacency();
  SimplexTable table{w.max_simplices};

  // Degrees decide the assignment order (higher first) and prune candidates.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] > deg[y]; });

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int v, int u, int placed) {
    // Adjacency with already-placed vertices must be preserved; for exact
    // (bijective) search it must be preserved both ways.
    for (int i = 0; i < placed; ++i) {
      int x = order[i];
      bool src_adj = adj[v].count(x) > 0;
      bool dst_adj = adj[u].count(image[x]) > 0;
      if (src_adj && !dst_adj) return false;
      if (exact && !src_adj && dst_adj) return false;
    }
    return true;
  };

  auto partial_simplicial = [&](void) {
    for (const auto& s : w.max_simplices) {
      std::vector<int> img;
      bool full = true;
      for (int v : s) {
        if (image[v] < 0) {
          full = false;
          continue;
        }
        img.push_back(image[v]);
      }
      img = sorted_unique(std::move(img));
      if (!table.contains_subset(img)) return false;
      if (exact && full && static_cast<int>(img.size()) == w.top_size &&
          !table.contains_exact(img))
        return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int placed) {
    if (placed == n) {
      auto m = validate_map(w, w, image);
      bool ok = m.simplicial && m.injective;
      if (ok && exact) {
        for (const auto& s : w.max_simplices) {
          std::vector<int> img;
          for (int v : s) img.push_back(image[v]);
          std::sort(img.begin(), img.end());
          if (!table.contains_exact(img)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) out.push_back(std::move(m));
      return;
    }
    int v = order[placed];
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      if (exact ? deg[u] != deg[v] : deg[u] < deg[v]) continue;
      if (!consistent(v, u, placed)) continue;
      image[v] = u;
      used[u] = 1;
      if (partial_simplicial()) rec(placed + 1);
      image[v] = -1;
      used[u] = 0;
    }
  };
  rec(0);
}

long long perm_order(const std::vector<int>& p) {
  long long ord = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<int> perm_compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

std::string cycle_notation(const std::vector<int>& p, const ComplexWindow& w) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      seen[i] = 1;
      continue;
    }
    os << "(";
    bool first = true;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) os << " ";
      os << w.vertex_labels[j];
      first = false;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "id";
}

GroupReport symbolic_21_group(const ComplexWindow& w) {
  // Vertices are a, b_n, c_n with maximal simplices {a,b_n,b_n+1} and
  // {b_n,b_n+1,c_n}. The shift s: n -> n+1 and the reflection
  // t: b_n -> b_-n, c_n -> c_-n-1 send both simplex patterns to simplex
  // patterns; together with t^2 = id and t s t = s^-1 this is the infinite
  // dihedral group. Verified over an index range rather than assumed.
  struct AffineMap {
    // n -> sign*n + add, with a separate additive shift for c indices.
    int sign, add_b, add_c;
  };
  AffineMap shift{1, 1, 1};
  AffineMap refl{-1, 0, -1};
  auto apply_b = [](const AffineMap& m, int n) { return m.sign * n + m.add_b; };
  auto apply_c = [](const AffineMap& m, int n) {
    return m.sign == 1 ? n + m.add_c : -n + m.add_c;
  };

  for (const AffineMap& m : {shift, refl}) {
    for (int n = -24; n <= 24; ++n) {
      // alpha_n = {a, b_n, b_n+1} must land on some alpha_m.
      int u = apply_b(m, n), v = apply_b(m, n + 1);
      if (std::abs(u - v) != 1) throw internal_error("(2,1) model: shift/reflection not simplicial");
      // beta_n = {b_n, b_n+1, c_n} must land on beta_min(u,v).
      int c = apply_c(m, n);
      if (c != std::min(u, v)) throw internal_error("(2,1) model: c index mismatch");
    }
  }
  // Relations: t t = id, t s t = s^-1 on b indices.
  auto comp = [&](const AffineMap& f, const AffineMap& g) {
    return AffineMap{f.sign * g.sign, f.sign * g.add_b + f.add_b, 0};
  };
  AffineMap tt = comp(refl, refl);
  if (tt.sign != 1 || tt.add_b != 0) throw internal_error("(2,1) model: reflection not involutive");
  AffineMap tst = comp(refl, comp(shift, refl));
  if (tst.sign != 1 || tst.add_b != -1) throw internal_error("(2,1) model: tst != s^-1");

  GroupReport rep;
  rep.invariants.infinite = true;
  rep.invariants.abelian = false;
  rep.invariants.shift_reflection_inversion = true;
  rep.generators = {"shift: b_n -> b_n+1, c_n -> c_n+1",
                    "reflection: b_n -> b_-n, c_n -> c_-n-1"};
  rep.name = identify_group(rep.invariants);
  (void)w;
  return rep;
}

} // namespace

std::vector<SimplicialMap> enumerate_injective_endomorphisms(const ComplexWindow& w) {
  if (!w.complete)
    throw truncated_window("enumeration over a truncated window is unsound");
  std::vector<SimplicialMap> out;
  search_injective(w, /*exact=*/false, out);
  return out;
}

GroupReport automorphism_group(const ComplexWindow& w) {
  if (w.symbolic && !w.complete) return symbolic_21_group(w);
  if (!w.complete) throw truncated_window("automorphism search over a truncated window");

  std::vector<SimplicialMap> autos;
  search_injective(w, /*exact=*/true, autos);

  // Closure under composition (the set of automorphisms always is; verify).
  std::set<std::vector<int>> keys;
  for (const auto& m : autos) keys.insert(m.assignment);
  for (const auto& f : autos)
    for (const auto& g : autos)
      if (!keys.count(perm_compose(f.assignment, g.assignment)))
        throw internal_error("automorphism set not closed under composition");

  GroupReport rep;
  rep.elements = autos;
  rep.invariants.order = static_cast<long long>(autos.size());
  rep.invariants.abelian = true;
  rep.invariants.exponent = 1;
  for (const auto& f : autos) {
    rep.invariants.exponent = std::lcm(rep.invariants.exponent, perm_order(f.assignment));
    for (const auto& g : autos)
      if (perm_compose(f.assignment, g.assignment) != perm_compose(g.assignment, f.assignment))
        rep.invariants.abelian = false;
  }
  if (rep.invariants.order == 8 && !rep.invariants.abelian) {
    for (const auto& s : autos) {
      if (perm_order(s.assignment) != 4) continue;
      for (const auto& t : autos) {
        if (perm_order(t.assignment) != 2) continue;
        auto tst = perm_compose(t.assignment, perm_compose(s.assignment, t.assignment));
        auto sinv = s.assignment;
        std::vector<int> inv(sinv.size());
        for (size_t i = 0; i < sinv.size(); ++i) inv[sinv[i]] = static_cast<int>(i);
        if (tst == inv) rep.invariants.dihedral_relation = true;
      }
    }
  }

  // A small generating set, greedily.
  std::set<std::vector<int>> gen_span;
  std::vector<int> identity(w.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  gen_span.insert(identity);
  for (const auto& f : autos) {
    if (gen_span.count(f.assignment)) continue;
    rep.generators.push_back(cycle_notation(f.assignment, w));
    // Close the span under composition.
    std::vector<std::vector<int>> frontier = {f.assignment};
    gen_span.insert(f.assignment);
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      std::vector<std::vector<int>> snapshot(gen_span.begin(), gen_span.end());
      for (const auto& x : frontier)
        for (const auto& g : snapshot)
          for (const auto& h : {perm_compose(x, g), perm_compose(g, x)})
            if (gen_span.insert(h).second) next.push_back(h);
      frontier = std::move(next);
    }
    if (gen_span.size() == autos.size()) break;
  }
  rep.name = identify_group(rep.invariants);
  return rep;
}

std::string to_string(GroupName n) {
  switch (n) {
    case GroupName::trivial: return "trivial";
    case GroupName::z2: return "Z2";
    case GroupName::z2xz2: return "Z2xZ2";
    case GroupName::z4: return "Z4";
    case GroupName::d4: return "D4";
    case GroupName::z_semi_z2: return "Z semidirect Z2";
    case GroupName::unknown: return "unknown";
  }
  return "?";
}

GroupName identify_group(const GroupInvariants& inv) {
  if (inv.infinite) {
    if (inv.shift_reflection_inversion) return GroupName::z_semi_z2;
    return GroupName::unknown;
  }
  if (inv.order < 1 || inv.exponent < 1 || (inv.order == 1 && inv.exponent != 1) ||
      inv.exponent > inv.order)
    throw rejected_input("inconsistent group invariants");
  if (inv.order == 1) return GroupName::trivial;
  if (inv.order == 2) {
    if (inv.exponent != 2 || !inv.abelian) throw rejected_input("inconsistent group invariants");
    return GroupName::z2;
  }
  if (inv.order == 4) {
    if (!inv.abelian) throw rejected_input("inconsistent group invariants");
    if (inv.exponent == 2) return GroupName::z2xz2;
    if (inv.exponent == 4) return GroupName::z4;
    throw rejected_input("inconsistent group invariants");
  }
  if (inv.order == 8 && !inv.abelian && inv.dihedral_relation) return GroupName::d4;
  return GroupName::unknown;
}

int GluingSymmetry::map_side(int piece, int side) const {
  return mod6(sign[piece] * side + offset[piece]);
}

bool is_gluing_symmetry(const Triangulation& t, const GluingSymmetry& s) {
  int P = t.piece_count();
  if (static_cast<int>(s.piece_image.size()) != P || static_cast<int>(s.sign.size()) != P ||
      static_cast<int>(s.offset.size()) != P)
    return false;
  std::vector<char> hit(P, 0);
  for (int p = 0; p < P; ++p) {
    if (s.piece_image[p] < 0 || s.piece_image[p] >= P || hit[s.piece_image[p]]) return false;
    hit[s.piece_image[p]] = 1;
    if (s.offset[p] % 2 != 0) return false;
    if (s.sign[p] != 1 && s.sign[p] != -1) return false;
  }
  for (int arc = 0; arc < t.arc_count(); ++arc) {
    auto [u, v] = t.arc_slots(arc);
    SlotRef ru = Triangulation::slot_ref(u), rv = Triangulation::slot_ref(v);
    int iu = Triangulation::slot_index(s.piece_image[ru.piece], s.map_side(ru.piece, ru.side));
    int iv = Triangulation::slot_index(s.piece_image[rv.piece], s.map_side(rv.piece, rv.side));
    if (!t.slot_paired(iu) || t.partner(iu) != iv) return false;
    bool par = (t.reversal(u) == Reversal::parallel) ^ (s.sign[ru.piece] < 0) ^
               (s.sign[rv.piece] < 0);
    if ((t.reversal(iu) == Reversal::parallel) != par) return false;
  }
  return true;
}

std::vector<GluingSymmetry> gluing_symmetries(const Triangulation& t) {
  auto diags = validate_triangulation(t);
  if (!diags.empty()) throw rejected_input("invalid triangulation: " + diags.front());
  int P = t.piece_count();
  std::vector<GluingSymmetry> out;

  for (int img0 = 0; img0 < P; ++img0) {
    for (int sg : {1, -1}) {
      for (int off = 0; off < 6; off += 2) {
        GluingSymmetry s;
        s.piece_image.assign(P, -1);
        s.sign.assign(P, 0);
        s.offset.assign(P, 0);
        s.piece_image[0] = img0;
        s.sign[0] = sg;
        s.offset[0] = off;
        // Propagate across pairings.
        std::vector<int> stack = {0};
        bool ok = true;
        while (ok && !stack.empty()) {
          int p = stack.back();
          stack.pop_back();
          for (int side = 0; side < 6 && ok; side += 2) {
            int slot = Triangulation::slot_index(p, side);
            SlotRef other = Triangulation::slot_ref(t.partner(slot));
            int islot = Triangulation::slot_index(s.piece_image[p], s.map_side(p, side));
            if (!t.slot_paired(islot)) {
              ok = false;
              break;
            }
            SlotRef iother = Triangulation::slot_ref(t.partner(islot));
            bool want_par = (t.reversal(slot) == Reversal::parallel) ^ (s.sign[p] < 0) ^
                            ((t.reversal(islot) == Reversal::parallel));
            // want_par == (sign[other.piece] < 0) must hold.
            int need_sign = want_par ? -1 : 1;
            int need_off = mod6(iother.side - need_sign * other.side);
            if (s.piece_image[other.piece] == -1) {
              s.piece_image[other.piece] = iother.piece;
              s.sign[other.piece] = need_sign;
              s.offset[other.piece] = need_off;
              stack.push_back(other.piece);
            } else if (s.piece_image[other.piece] != iother.piece ||
                       s.sign[other.piece] != need_sign || s.offset[other.piece] != need_off) {
              ok = false;
            }
          }
        }
        if (ok && is_gluing_symmetry(t, s)) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

GluingSymmetry compose(const Triangulation& t, const GluingSymmetry& f, const GluingSymmetry& g) {
  int P = t.piece_count();
  GluingSymmetry h;
  h.piece_image.assign(P, -1);
  h.sign.assign(P, 0);
  h.offset.assign(P, 0);
  for (int p = 0; p < P; ++p) {
    int q = g.piece_image[p];
    h.piece_image[p] = f.piece_image[q];
    h.sign[p] = f.sign[q] * g.sign[p];
    h.offset[p] = mod6(f.sign[q] * g.offset[p] + f.offset[q]);
  }
  return h;
}

NormalArc apply_symmetry(const Triangulation& t, const GluingSymmetry& s, const NormalArc& a) {
  if (!is_gluing_symmetry(t, s)) throw rejected_input("not a gluing symmetry");
  if (a.is_base()) {
    SlotRef r = Triangulation::slot_ref(t.arc_slots(a.base_arc())[0]);
    int islot = Triangulation::slot_index(s.piece_image[r.piece], s.map_side(r.piece, r.side));
    return NormalArc::base(t.arc_of_slot(islot));
  }
  std::vector<NormalArc::Counts> counts(t.piece_count());
  for (auto& c : counts) c.fill(0);
  for (int p = 0; p < t.piece_count(); ++p)
    for (int type = 0; type < 15; ++type) {
      std::uint32_t c = a.count(p, type);
      if (!c) continue;
      auto [i, j] = segment_sides(type);
      counts[s.piece_image[p]][segment_type(s.map_side(p, i), s.map_side(p, j))] += c;
    }
  std::array<EndpointMark, 2> ends;
  for (int k = 0; k < 2; ++k) {
    const EndpointMark& e = a.endpoints()[k];
    ends[k] = {s.piece_image[e.piece], s.map_side(e.piece, e.side), 0};
  }
  return canonicalize(t, NormalArc::from_counts(std::move(counts), ends));
}

SimplicialMap induced_map(const GluingSymmetry& sym, const ComplexWindow& w) {
  if (!w.ball) throw rejected_input("induced_map needs an engine-built window");
  const Triangulation& root = *w.ball->root;
  if (!is_gluing_symmetry(root, sym)) throw rejected_input("not a gluing symmetry");
  std::vector<int> assignment(w.vertex_count(), -1);
  for (int v = 0; v < w.vertex_count(); ++v) {
    NormalArc img = apply_symmetry(root, sym, w.vertex_arcs[v]);
    int u = w.vertex_by_key(img.key());
    if (u < 0)
      throw internal_error("induced image leaves the window (ball not symmetric?)");
    assignment[v] = u;
  }
  return validate_map(w, w, assignment);
}

} // namespace arcc
