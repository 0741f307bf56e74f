#pragma once

#include <string>

#include "json.hpp"

#include "arcc/complex.hpp"
#include "arcc/flip.hpp"
#include "arcc/surface.hpp"

namespace arcc {

using ordered_json = nlohmann::ordered_json;

// Triangulation file format: pieces as 6-slot records, pairings with
// reversal flags, optional signature. Emission is canonical, so
// export(import(bytes)) == bytes for files this library wrote.
ordered_json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const ordered_json& j);

ordered_json to_json(const NormalArc& a);
NormalArc normal_arc_from_json(const ordered_json& j);

ordered_json to_json(const FlipGraphBall& ball);
ordered_json to_json(const ComplexWindow& w);
ComplexWindow complex_from_json(const ordered_json& j);

std::string to_dot(const FlipGraphBall& ball);
std::string to_dot(const ComplexWindow& w);

void export_graph(const FlipGraphBall& ball, const std::string& format, const std::string& path);
void export_graph(const ComplexWindow& w, const std::string& format, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace arcc
