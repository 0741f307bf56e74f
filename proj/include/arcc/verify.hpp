#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcc/complex.hpp"

namespace arcc {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct Report {
  std::string case_id;
  std::vector<Check> checks;
  double seconds = 0;
  std::vector<std::string> notes;  // truncation etc.
  bool pass() const;
};

std::string format_report(const Report& r);

// Acceptance checks for the three small cases.
Report run_small_case_report(SmallCase c);

struct SuiteParams {
  int genus = 2;
  int boundary = 2;
  bool orientable = false;
  int radius = 3;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::size_t max_nodes = 500000;
};

// Ball sweep: count conservation, signature invariance, flip involution,
// i(old,new)=1, commuting disjoint flips, completions in {1,2}, random-pair
// connectivity, piece-class totals.
Report run_invariant_suite(const SuiteParams& params);

// An arc configuration to search for: labels, required pairwise geometric
// intersection numbers (0 or 1), and labeled sets that must bound a piece of
// a given class.
struct ConfigurationPattern {
  std::vector<std::string> labels;
  struct IntersectionReq {
    std::string a, b;
    int i = 0;
  };
  std::vector<IntersectionReq> intersections;
  struct CotriangleReq {
    std::vector<std::string> arcs;  // 2 or 3 distinct labels
    PieceClass piece_class = PieceClass::embedded;
  };
  std::vector<CotriangleReq> cotriangles;
};

// Throws rejected_input when the requirements contradict each other.
void validate_pattern(const ConfigurationPattern& p);

struct ConfigWitness {
  bool found = false;
  std::map<std::string, int> assignment;     // label -> window vertex
  std::map<std::string, std::string> keys;   // label -> arc key
  int radius = 0;
};

ConfigWitness find_configuration(const ConfigurationPattern& pattern, int genus, int boundary,
                                 int radius, bool orientable = false);

ConfigurationPattern pattern_from_json_text(const std::string& text);

} // namespace arcc
