#include "arcc/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace arcc {

namespace {

ordered_json signature_json(const SurfaceSignature& sig) {
  return ordered_json{{"genus", sig.genus},
                      {"boundary", sig.boundary},
                      {"orientable", sig.orientable}};
}

} // namespace

ordered_json to_json(const Triangulation& t) {
  ordered_json j;
  j["format"] = "arcc-triangulation";
  ordered_json pieces = ordered_json::array();
  for (int p = 0; p < t.piece_count(); ++p) {
    pieces.push_back(ordered_json{{"id", p},
                                  {"arc_slots", {0, 2, 4}},
                                  {"boundary_slots", {1, 3, 5}}});
  }
  j["pieces"] = std::move(pieces);
  ordered_json pairings = ordered_json::array();
  for (const auto& pr : t.pairings()) {
    pairings.push_back(ordered_json{{"a", {{"piece", pr.a.piece}, {"slot", pr.a.side}}},
                                    {"b", {{"piece", pr.b.piece}, {"slot", pr.b.side}}},
                                    {"reversal", to_string(pr.rev)}});
  }
  j["pairings"] = std::move(pairings);
  if (validate_triangulation(t).empty()) j["signature"] = signature_json(classify_surface(t));
  return j;
}

Triangulation triangulation_from_json(const ordered_json& j) {
  try {
    int pieces = static_cast<int>(j.at("pieces").size());
    std::vector<PairingSpec> pairings;
    for (const auto& pr : j.at("pairings")) {
      PairingSpec spec;
      spec.a = {pr.at("a").at("piece").get<int>(), pr.at("a").at("slot").get<int>()};
      spec.b = {pr.at("b").at("piece").get<int>(), pr.at("b").at("slot").get<int>()};
      std::string rev = pr.at("reversal").get<std::string>();
      if (rev == "parallel")
        spec.rev = Reversal::parallel;
      else if (rev == "antiparallel")
        spec.rev = Reversal::antiparallel;
      else
        throw io_error("unknown reversal flag: " + rev);
      pairings.push_back(spec);
    }
    Triangulation t(pieces, pairings);
    if (j.contains("signature")) {
      SurfaceSignature want{j["signature"].at("genus").get<int>(),
                            j["signature"].at("boundary").get<int>(),
                            j["signature"].at("orientable").get<bool>()};
      if (validate_triangulation(t).empty() && !(classify_surface(t) == want))
        throw io_error("triangulation does not match its declared signature");
    }
    return t;
  } catch (const ordered_json::exception& e) {
    throw io_error(std::string("malformed triangulation document: ") + e.what());
  }
}

ordered_json to_json(const NormalArc& a) {
  if (a.is_base()) return ordered_json{{"base", a.base_arc()}};
  ordered_json j;
  j["pieces"] = a.counts().size();
  ordered_json segs = ordered_json::array();
  for (size_t p = 0; p < a.counts().size(); ++p)
    for (int type = 0; type < 15; ++type) {
      if (!a.counts()[p][type]) continue;
      auto [x, y] = segment_sides(type);
      segs.push_back(ordered_json{{"piece", p}, {"sides", {x, y}}, {"count", a.counts()[p][type]}});
    }
  j["segments"] = std::move(segs);
  ordered_json ends = ordered_json::array();
  for (const auto& e : a.endpoints())
    ends.push_back(ordered_json{{"piece", e.piece}, {"side", e.side}, {"rank", e.rank}});
  j["endpoints"] = std::move(ends);
  return j;
}

NormalArc normal_arc_from_json(const ordered_json& j) {
  try {
    if (j.contains("base")) return NormalArc::base(j["base"].get<int>());
    std::vector<NormalArc::Counts> counts(j.at("pieces").get<size_t>());
    for (auto& c : counts) c.fill(0);
    for (const auto& s : j.at("segments")) {
      auto sides = s.at("sides");
      counts[s.at("piece").get<int>()][segment_type(sides.at(0).get<int>(), sides.at(1).get<int>())] =
          s.at("count").get<std::uint32_t>();
    }
    std::array<EndpointMark, 2> ends;
    int k = 0;
    for (const auto& e : j.at("endpoints")) {
      if (k >= 2) throw io_error("normal arc with more than two endpoints");
      ends[k++] = {e.at("piece").get<int>(), e.at("side").get<int>(), e.at("rank").get<int>()};
    }
    if (k != 2) throw io_error("normal arc needs exactly two endpoints");
    return NormalArc::from_counts(std::move(counts), ends);
  } catch (const ordered_json::exception& e) {
    throw io_error(std::string("malformed normal arc document: ") + e.what());
  }
}

ordered_json to_json(const FlipGraphBall& ball) {
  ordered_json j;
  j["format"] = "arcc-ball";
  j["radius"] = ball.radius;
  j["truncated"] = ball.truncated;
  j["stabilized"] = ball.stabilized;
  if (validate_triangulation(*ball.root).empty())
    j["signature"] = signature_json(classify_surface(*ball.root));
  ordered_json nodes = ordered_json::array();
  for (size_t n = 0; n < ball.nodes.size(); ++n) {
    nodes.push_back(ordered_json{{"id", n},
                                 {"depth", ball.nodes[n].depth},
                                 {"arcs", ball.nodes[n].arc_keys}});
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : ball.edges) {
    edges.push_back(ordered_json{{"from", e.from},
                                 {"to", e.to},
                                 {"flipped", ball.nodes[e.from].arc_keys[e.arc]}});
  }
  j["edges"] = std::move(edges);
  return j;
}

ordered_json to_json(const ComplexWindow& w) {
  ordered_json j;
  j["format"] = "arcc-complex";
  j["complete"] = w.complete;
  j["symbolic"] = w.symbolic;
  j["top_size"] = w.top_size;
  ordered_json verts = ordered_json::array();
  for (int v = 0; v < w.vertex_count(); ++v) {
    ordered_json jv{{"id", v},
                    {"label", w.vertex_labels[v]},
                    {"key", w.vertex_keys[v]},
                    {"interior", w.interior[v] != 0}};
    if (!w.symbolic && v < static_cast<int>(w.vertex_arcs.size()))
      jv["arc"] = to_json(w.vertex_arcs[v]);
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  j["maximal_simplices"] = w.max_simplices;
  return j;
}

ComplexWindow complex_from_json(const ordered_json& j) {
  try {
    ComplexWindow w;
    w.complete = j.at("complete").get<bool>();
    w.symbolic = j.at("symbolic").get<bool>();
    w.top_size = j.at("top_size").get<int>();
    for (const auto& jv : j.at("vertices")) {
      w.vertex_labels.push_back(jv.at("label").get<std::string>());
      w.vertex_keys.push_back(jv.at("key").get<std::string>());
      w.interior.push_back(jv.at("interior").get<bool>() ? 1 : 0);
      if (jv.contains("arc")) w.vertex_arcs.push_back(normal_arc_from_json(jv["arc"]));
    }
    for (const auto& s : j.at("maximal_simplices"))
      w.max_simplices.push_back(s.get<std::vector<int>>());
    return w;
  } catch (const ordered_json::exception& e) {
    throw io_error(std::string("malformed complex document: ") + e.what());
  }
}

std::string to_dot(const FlipGraphBall& ball) {
  std::ostringstream os;
  os << "graph flip_ball {\n";
  for (size_t n = 0; n < ball.nodes.size(); ++n)
    os << "  n" << n << " [label=\"n" << n << " d" << ball.nodes[n].depth << "\"];\n";
  std::set<std::pair<int, int>> seen;
  for (const auto& e : ball.edges) {
    auto key = std::minmax(e.from, e.to);
    if (seen.count(key)) continue;
    seen.insert(key);
    os << "  n" << e.from << " -- n" << e.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ComplexWindow& w) {
  std::ostringstream os;
  auto adj = w.adjacency();
  os << "graph arc_complex {\n";
  for (int v = 0; v < w.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << w.vertex_labels[v] << " deg " << adj[v].size()
       << (w.interior[v] ? "" : " (frontier)") << "\"];\n";
  }
  for (int v = 0; v < w.vertex_count(); ++v)
    for (int u : adj[v])
      if (u > v) os << "  v" << v << " -- v" << u << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

void export_any(const std::string& dot, const ordered_json& json, const std::string& format,
                const std::string& path) {
  if (format == "dot")
    write_file(path, dot);
  else if (format == "json")
    write_file(path, json.dump(2) + "\n");
  else
    throw rejected_input("unknown export format: " + format);
}

} // namespace

void export_graph(const FlipGraphBall& ball, const std::string& format, const std::string& path) {
  export_any(to_dot(ball), to_json(ball), format, path);
}

void export_graph(const ComplexWindow& w, const std::string& format, const std::string& path) {
  export_any(to_dot(w), to_json(w), format, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << content;
  if (!out) throw io_error("write failed for " + path);
}

} // namespace arcc
