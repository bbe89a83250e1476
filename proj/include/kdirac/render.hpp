// Rendering of diagrams, direct images, complexes and dimension tables.
//
// Formats:
//   Text : the staircase tables used everywhere in tests; doubled integer
//          coordinates by default, exact fractions with half=true.
//   Json : machine-readable record (nlohmann, ordered keys, 2-space indent,
//          trailing newline); parse-back helpers below round-trip it.
//   Dot  : graphviz digraph, one rank per staircase row.
//   Tikz : standalone LaTeX picture in the staircase layout.
//
// Weight syntax: doubled coordinates in brackets with the marking's bars,
// e.g. Q: [-3,-3,-3|-3|3], P: [-3,-3,-3|1,-1].  Vertex labels are "A" + row
// + column ("A31"; "A10,0" once an index needs two digits), module labels
// "U" likewise.

#pragma once

#include <string>

#include <json.hpp>

#include "kdirac/bgg.hpp"
#include "kdirac/hasse.hpp"
#include "kdirac/pushdown.hpp"
#include "kdirac/weights.hpp"

namespace kdirac {

enum class OutputFormat { Text, Json, Dot, Tikz };

// "text" | "json" | "dot" | "tikz" (InvalidParameter otherwise).
OutputFormat parse_format(const std::string& name);

std::string weight_str(const Weight& w, ParabolicMarking m, bool half = false);
std::string vertex_label(const HasseVertex& v);
std::string module_label(int i, int j);
std::string root_label_str(const RootLabel& r);  // a(3,4) / b(3,5)
std::string root_label_tex(const RootLabel& r);  // \alpha_{3,4} / \beta_{3,5}

// Column indices j present in the term at staircase row i (ascending); the
// JSON schema omits them, so the parser reconstructs them with this.
std::vector<int> staircase_columns(int k, int i);

std::string render_hasse(const HasseDiagram& hd, OutputFormat fmt);
std::string render_bgg(const BggDiagram& bgg, OutputFormat fmt, bool half = false);
// Per-vertex direct images; Text and Json only.  Json carries the full
// pipeline record (vertices with images + complex block) when the seed is
// canonical; for other seeds "complex" is null.
std::string render_pushdown(const BggDiagram& bgg, OutputFormat fmt, bool half = false);
std::string render_complex(const BggDiagram& bgg, const ComplexDescriptor& c, OutputFormat fmt);
std::string render_dims(const ComplexDescriptor& c, OutputFormat fmt);

// JSON building blocks (all round-trip: from(to(x)) == x).
nlohmann::ordered_json module_to_json(const ModuleDescriptor& d);
ModuleDescriptor module_from_json(const nlohmann::json& j);
nlohmann::ordered_json complex_block_json(const ComplexDescriptor& c);
ComplexDescriptor complex_from_json(int k, const nlohmann::json& block);
// Full record: k, seed, vertices (+images), complex block (or null).
nlohmann::ordered_json pipeline_json(const BggDiagram& bgg, const ComplexDescriptor* c);

}  // namespace kdirac
