#include "doctest.h"

#include <map>
#include <set>

#include "arcc/surface.hpp"

using namespace arcc;

namespace {

Triangulation pants() {
  return Triangulation(2, {{{0, 0}, {1, 0}, Reversal::antiparallel},
                           {{0, 2}, {1, 4}, Reversal::antiparallel},
                           {{0, 4}, {1, 2}, Reversal::antiparallel}});
}

} // namespace

TEST_CASE("pair of pants classifies as (0,3) orientable") {
  Triangulation t = pants();
  CHECK(validate_triangulation(t).empty());
  SurfaceSignature sig = classify_surface(t);
  CHECK(sig == SurfaceSignature{0, 3, true});
  CHECK(sig.euler_characteristic() == -1);
  for (int p = 0; p < 2; ++p) CHECK(classify_piece(t, p) == PieceClass::embedded);
}

TEST_CASE("hand-built nonorientable (1,2) and (2,1) gluings") {
  // Same gluing up to one reversal flag; the flag decides (1,2) vs (2,1).
  Triangulation t12(2, {{{0, 0}, {0, 2}, Reversal::parallel},
                        {{0, 4}, {1, 0}, Reversal::antiparallel},
                        {{1, 2}, {1, 4}, Reversal::antiparallel}});
  CHECK(classify_surface(t12) == SurfaceSignature{1, 2, false});
  CHECK(classify_piece(t12, 0) == PieceClass::twisted_non_embedded);
  CHECK(classify_piece(t12, 1) == PieceClass::regular_non_embedded);

  Triangulation t21(2, {{{0, 0}, {0, 2}, Reversal::parallel},
                        {{0, 4}, {1, 0}, Reversal::antiparallel},
                        {{1, 2}, {1, 4}, Reversal::parallel}});
  CHECK(classify_surface(t21) == SurfaceSignature{2, 1, false});
  CHECK(classify_piece(t21, 1) == PieceClass::twisted_non_embedded);
}

TEST_CASE("build_surface round-trips through classify_surface") {
  struct Case {
    int g, r;
    bool orient;
  };
  for (Case c : {Case{1, 2, false}, Case{2, 1, false}, Case{1, 3, false}, Case{2, 2, false},
                 Case{3, 1, false}, Case{4, 2, false}, Case{1, 5, false}, Case{0, 3, true},
                 Case{0, 4, true}, Case{1, 1, true}, Case{1, 2, true}, Case{2, 1, true},
                 Case{2, 3, true}}) {
    CAPTURE(c.g);
    CAPTURE(c.r);
    CAPTURE(c.orient);
    Triangulation t = build_surface(c.g, c.r, c.orient);
    CHECK(validate_triangulation(t).empty());
    CHECK(classify_surface(t) == SurfaceSignature{c.g, c.r, c.orient});
    int expected_arcs = c.orient ? 6 * c.g + 3 * c.r - 6 : 3 * c.g + 3 * c.r - 6;
    CHECK(t.arc_count() == expected_arcs);
    CHECK(3 * t.piece_count() == 2 * t.arc_count());
  }
}

TEST_CASE("paper counts at the named signatures") {
  Triangulation t22 = build_surface(2, 2, false);
  CHECK(t22.arc_count() == 6);
  CHECK(t22.piece_count() == 4);
  CHECK(classify_surface(t22).euler_characteristic() == -2);

  Triangulation t21 = build_surface(2, 1, false);
  CHECK(t21.arc_count() == 3);
  CHECK(t21.piece_count() == 2);

  Triangulation t12 = build_surface(1, 2, false);
  CHECK(t12.arc_count() == 3);

  Triangulation t31 = build_surface(3, 1, false);
  CHECK(t31.arc_count() == 6);
  CHECK(t31.piece_count() == 4);
  CHECK(classify_surface(t31) == SurfaceSignature{3, 1, false});
}

TEST_CASE("degenerate signatures are rejected") {
  CHECK_THROWS_AS(build_surface(1, 1, false), unsupported_signature);
  CHECK_THROWS_AS(build_surface(0, 2, true), unsupported_signature);
  CHECK_THROWS_AS(build_surface(0, 1, true), unsupported_signature);
  CHECK_THROWS_AS(build_surface(2, 0, false), unsupported_signature);
  CHECK_THROWS_AS(build_surface(0, 5, false), unsupported_signature);
}

TEST_CASE("validation diagnostics name the offence") {
  // One unpaired slot.
  Triangulation missing(2, {{{0, 0}, {1, 0}, Reversal::antiparallel},
                            {{0, 2}, {1, 4}, Reversal::antiparallel}});
  auto diags = validate_triangulation(missing);
  REQUIRE(!diags.empty());
  CHECK(diags.front().find("unpaired") != std::string::npos);

  // Two disjoint glued pairs.
  Triangulation split(4, {{{0, 0}, {1, 0}, Reversal::antiparallel},
                          {{0, 2}, {1, 4}, Reversal::antiparallel},
                          {{0, 4}, {1, 2}, Reversal::antiparallel},
                          {{2, 0}, {3, 0}, Reversal::antiparallel},
                          {{2, 2}, {3, 4}, Reversal::antiparallel},
                          {{2, 4}, {3, 2}, Reversal::antiparallel}});
  diags = validate_triangulation(split);
  REQUIRE(!diags.empty());
  CHECK(diags.front().find("disconnected") != std::string::npos);

  CHECK_THROWS_AS(classify_surface(missing), rejected_input);
  CHECK_THROWS_AS(Triangulation(1, {{{0, 0}, {0, 0}, Reversal::parallel}}), rejected_input);
}

TEST_CASE("cut_along: full cut, empty cut, single twisted arc") {
  Triangulation t = build_surface(2, 2, false);
  SurfaceSignature sig = classify_surface(t);

  std::vector<int> all;
  for (int a = 0; a < t.arc_count(); ++a) all.push_back(a);
  RegionReport full = cut_along(t, all);
  CHECK(static_cast<int>(full.regions.size()) == t.piece_count());
  for (const auto& reg : full.regions) {
    CHECK(reg.euler == 1);
    CHECK(reg.orientable);
    REQUIRE(reg.boundary_cycles.size() == 1);
    CHECK(reg.boundary_cycles.front().size() == 6);
  }

  RegionReport none = cut_along(t, {});
  REQUIRE(none.regions.size() == 1);
  CHECK(none.regions.front().euler == sig.euler_characteristic());
  CHECK(none.regions.front().orientable == sig.orientable);
  CHECK(none.regions.front().boundary_cycles.size() == static_cast<size_t>(sig.boundary));

  // Cutting along arcs raises the euler characteristic by one per arc.
  for (int a = 0; a < t.arc_count(); ++a) {
    RegionReport rr = cut_along(t, {a});
    int chi = 0;
    for (const auto& reg : rr.regions) chi += reg.euler;
    CHECK(chi == sig.euler_characteristic() + 1);
  }

  // A parallel self-gluing: keeping every other arc uncut except that one
  // keeps the Moebius band inside one region.
  Triangulation t21 = build_surface(2, 1, false);
  int twisted_arc = -1;
  for (int a = 0; a < t21.arc_count(); ++a)
    if (t21.self_paired(a) &&
        t21.reversal(t21.arc_slots(a)[0]) == Reversal::parallel)
      twisted_arc = a;
  REQUIRE(twisted_arc >= 0);
  std::vector<int> rest;
  for (int a = 0; a < t21.arc_count(); ++a)
    if (a != twisted_arc) rest.push_back(a);
  RegionReport rr = cut_along(t21, rest);
  bool found_moebius = false;
  for (const auto& reg : rr.regions)
    if (!reg.orientable && reg.euler == 0) found_moebius = true;
  CHECK(found_moebius);
}

TEST_CASE("cut arc sides appear twice across region boundaries") {
  Triangulation t = build_surface(1, 3, false);
  std::vector<int> cuts = {0, 2};
  RegionReport rr = cut_along(t, cuts);
  std::map<int, int> seen;
  for (const auto& reg : rr.regions)
    for (const auto& cyc : reg.boundary_cycles)
      for (const auto& lab : cyc)
        if (lab.is_arc) seen[lab.arc]++;
  for (int a : cuts) CHECK(seen[a] == 2);
}
