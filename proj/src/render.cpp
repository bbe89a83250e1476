#include "kdirac/render.hpp"

#include <algorithm>
#include <sstream>

#include "kdirac/dims.hpp"
#include "kdirac/errors.hpp"

namespace kdirac {

namespace {

using OJson = nlohmann::ordered_json;

std::string two_part_label(char head, int i, int j) {
  std::string s(1, head);
  if (i > 9 || j > 9) {
    s += std::to_string(i) + "," + std::to_string(j);
  } else {
    s += std::to_string(i) + std::to_string(j);
  }
  return s;
}

std::string coord_str(Coord2 c2, bool half) {
  return half ? coord2_half_str(c2) : std::to_string(c2);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "dot") return OutputFormat::Dot;
  if (name == "tikz") return OutputFormat::Tikz;
  throw InvalidParameter("unknown output format '" + name + "' (text, json, dot, tikz)");
}

std::string weight_str(const Weight& w, ParabolicMarking m, bool half) {
  const int k = w.k();
  // Bars sit after the coordinates whose Dynkin node is crossed:
  // P after k; Q after k and k+1; R after k+1; G none.
  const bool bar_k = (m == ParabolicMarking::P || m == ParabolicMarking::Q);
  const bool bar_k1 = (m == ParabolicMarking::Q || m == ParabolicMarking::R);
  std::string s = "[";
  for (int c = 1; c <= k + 2; ++c) {
    s += coord_str(w.at2(c), half);
    if (c == k + 2) break;
    if ((c == k && bar_k) || (c == k + 1 && bar_k1)) {
      s += "|";
    } else {
      s += ",";
    }
  }
  s += "]";
  return s;
}

std::string vertex_label(const HasseVertex& v) { return two_part_label('A', v.row(), v.col()); }

std::string module_label(int i, int j) { return two_part_label('U', i, j); }

std::string root_label_str(const RootLabel& r) {
  return std::string(r.kind == RootKind::Alpha ? "a" : "b") + "(" + std::to_string(r.i) + "," +
         std::to_string(r.j) + ")";
}

std::string root_label_tex(const RootLabel& r) {
  return std::string(r.kind == RootKind::Alpha ? "\\alpha" : "\\beta") + "_{" +
         std::to_string(r.i) + "," + std::to_string(r.j) + "}";
}

std::vector<int> staircase_columns(int k, int i) {
  if (i == 0 || i == 1) return {i};
  std::vector<int> js;
  for (int t = i / 2; t >= std::max(0, i - k); --t) js.push_back(i - 2 * t);
  return js;
}

// ---- hasse -----------------------------------------------------------------

namespace {

std::string hasse_text(const HasseDiagram& hd) {
  std::ostringstream os;
  os << "relative Hasse diagram  k=" << hd.k() << "\n";
  os << "vertices: " << hd.vertices().size() << "  edges: " << hd.edges().size() << "\n";
  int row = -1;
  for (const HasseVertex& v : hd.vertices()) {
    if (v.row() != row) {
      if (row >= 0) os << "\n";
      row = v.row();
      os << "row " << row << ": " << vertex_label(v);
    } else {
      os << "  " << vertex_label(v);
    }
  }
  os << "\n";
  for (const HasseEdge& e : hd.edges()) {
    os << vertex_label(e.from) << " -> " << vertex_label(e.to) << " [" << root_label_str(e.label)
       << "]\n";
  }
  return os.str();
}

// Rank groups per row keep graphviz output in the staircase shape.
std::string hasse_dot_body(const HasseDiagram& hd, const BggDiagram* bgg, bool half) {
  std::ostringstream os;
  os << "  rankdir=TB;\n  node [shape=box];\n";
  for (const HasseVertex& v : hd.vertices()) {
    os << "  \"" << vertex_label(v) << "\" [label=\"" << vertex_label(v);
    if (bgg != nullptr) os << "\\n" << weight_str(bgg->weight_at(v), ParabolicMarking::Q, half);
    os << "\"];\n";
  }
  for (int i = 0; i <= 2 * hd.k(); ++i) {
    os << "  { rank=same;";
    for (const HasseVertex& v : hd.vertices()) {
      if (v.row() == i) os << " \"" << vertex_label(v) << "\";";
    }
    os << " }\n";
  }
  for (const HasseEdge& e : hd.edges()) {
    os << "  \"" << vertex_label(e.from) << "\" -> \"" << vertex_label(e.to) << "\" [label=\""
       << root_label_str(e.label) << "\"];\n";
  }
  return os.str();
}

std::string tikz_node_name(const HasseVertex& v) {
  return "A" + std::to_string(v.row()) + "-" + std::to_string(v.col());
}

std::string hasse_tikz(const HasseDiagram& hd, const BggDiagram* bgg, bool half) {
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n";
  os << "\\begin{tikzpicture}[x=" << (bgg != nullptr ? "3.4cm" : "1.8cm") << ",y=1.4cm]\n";
  for (const HasseVertex& v : hd.vertices()) {
    os << "  \\node (" << tikz_node_name(v) << ") at (" << v.col() << "," << -v.row() << ") {$";
    if (bgg != nullptr) {
      os << weight_str(bgg->weight_at(v), ParabolicMarking::Q, half);
    } else {
      os << "A_{" << v.row() << "," << v.col() << "}";
    }
    os << "$};\n";
  }
  for (const HasseEdge& e : hd.edges()) {
    const bool rightward = e.to.col() > e.from.col();
    os << "  \\draw[->] (" << tikz_node_name(e.from) << ") -- (" << tikz_node_name(e.to)
       << ") node[midway," << (rightward ? "above right" : "above left") << "] {$"
       << root_label_tex(e.label) << "$};\n";
  }
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

OJson vertex_json(const HasseVertex& v) {
  return OJson{{"s", v.s}, {"t", v.t}, {"i", v.row()}, {"j", v.col()}};
}

std::string hasse_json(const HasseDiagram& hd) {
  OJson j;
  j["k"] = hd.k();
  j["vertices"] = OJson::array();
  for (const HasseVertex& v : hd.vertices()) j["vertices"].push_back(vertex_json(v));
  j["edges"] = OJson::array();
  for (const HasseEdge& e : hd.edges()) {
    j["edges"].push_back(OJson{{"from", {e.from.s, e.from.t}},
                               {"to", {e.to.s, e.to.t}},
                               {"label",
                                OJson{{"kind", e.label.kind == RootKind::Alpha ? "a" : "b"},
                                      {"i", e.label.i},
                                      {"j", e.label.j}}}});
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_hasse(const HasseDiagram& hd, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      return hasse_text(hd);
    case OutputFormat::Json:
      return hasse_json(hd);
    case OutputFormat::Dot:
      return "digraph hasse_k" + std::to_string(hd.k()) + " {\n" + hasse_dot_body(hd, nullptr, false) +
             "}\n";
    case OutputFormat::Tikz:
      return hasse_tikz(hd, nullptr, false);
  }
  throw StructuralError("render_hasse: unhandled format");
}

// ---- bgg -------------------------------------------------------------------

namespace {

std::string bgg_text(const BggDiagram& bgg, bool half) {
  std::ostringstream os;
  os << "relative BGG diagram  k=" << bgg.k() << "\n";
  os << "seed: " << weight_str(bgg.seed(), ParabolicMarking::Q, half) << "\n";
  int row = -1;
  for (const HasseVertex& v : bgg.diagram().vertices()) {
    if (v.row() != row) {
      if (row >= 0) os << "\n";
      row = v.row();
      os << "row " << row << ": ";
    } else {
      os << "  ";
    }
    os << vertex_label(v) << " " << weight_str(bgg.weight_at(v), ParabolicMarking::Q, half);
  }
  os << "\n";
  return os.str();
}

OJson weight_json(const Weight& w) { return OJson(w.coords2()); }

std::string bgg_json(const BggDiagram& bgg) {
  OJson j;
  j["k"] = bgg.k();
  j["seed"] = weight_json(bgg.seed());
  j["vertices"] = OJson::array();
  for (const HasseVertex& v : bgg.diagram().vertices()) {
    OJson vj = vertex_json(v);
    vj["weight2"] = weight_json(bgg.weight_at(v));
    j["vertices"].push_back(std::move(vj));
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_bgg(const BggDiagram& bgg, OutputFormat fmt, bool half) {
  switch (fmt) {
    case OutputFormat::Text:
      return bgg_text(bgg, half);
    case OutputFormat::Json:
      return bgg_json(bgg);
    case OutputFormat::Dot:
      return "digraph bgg_k" + std::to_string(bgg.k()) + " {\n" +
             hasse_dot_body(bgg.diagram(), &bgg, half) + "}\n";
    case OutputFormat::Tikz:
      return hasse_tikz(bgg.diagram(), &bgg, half);
  }
  throw StructuralError("render_bgg: unhandled format");
}

// ---- pushdown --------------------------------------------------------------

namespace {

std::string image_str(const DirectImage& im, bool half) {
  if (im.empty()) return "\u2205";  // empty-set sign
  return weight_str(*im.weight, ParabolicMarking::P, half) + "_" +
         (im.degree == ImageDegree::Degree0 ? "0" : "1");
}

std::string pushdown_text(const BggDiagram& bgg, bool half) {
  std::ostringstream os;
  os << "direct images  k=" << bgg.k() << "\n";
  os << "seed: " << weight_str(bgg.seed(), ParabolicMarking::Q, half) << "\n";
  int row = -1;
  for (const HasseVertex& v : bgg.diagram().vertices()) {
    if (v.row() != row) {
      if (row >= 0) os << "\n";
      row = v.row();
      os << "row " << row << ": ";
    } else {
      os << "  ";
    }
    os << vertex_label(v) << " " << image_str(direct_image(bgg.weight_at(v)), half);
  }
  os << "\n";
  return os.str();
}

}  // namespace

nlohmann::ordered_json module_to_json(const ModuleDescriptor& d) {
  return OJson{{"slk", d.slk_hw}, {"so4", {d.so4_a, d.so4_b}}, {"dim", d.dim}};
}

ModuleDescriptor module_from_json(const nlohmann::json& j) {
  ModuleDescriptor d;
  d.slk_hw = j.at("slk").get<std::vector<std::int64_t>>();
  const auto so4 = j.at("so4").get<std::vector<std::int64_t>>();
  if (so4.size() != 2) throw InvalidParameter("module record: so4 needs exactly two entries");
  d.so4_a = so4[0];
  d.so4_b = so4[1];
  d.dim = j.at("dim").get<std::int64_t>();
  return d;
}

nlohmann::ordered_json complex_block_json(const ComplexDescriptor& c) {
  OJson block;
  block["positions"] = OJson::array();
  for (const ComplexTerm& t : c.terms) block["positions"].push_back(t.position);
  block["terms"] = OJson::array();
  for (const ComplexTerm& t : c.terms) {
    OJson mods = OJson::array();
    for (const ModuleDescriptor& m : t.modules) mods.push_back(module_to_json(m));
    block["terms"].push_back(std::move(mods));
  }
  block["orders"] = c.orders;
  return block;
}

ComplexDescriptor complex_from_json(int k, const nlohmann::json& block) {
  ComplexDescriptor c;
  c.k = k;
  const auto& positions = block.at("positions");
  const auto& terms = block.at("terms");
  if (positions.size() != terms.size()) {
    throw InvalidParameter("complex record: positions and terms disagree in length");
  }
  for (std::size_t n = 0; n < terms.size(); ++n) {
    ComplexTerm t;
    t.position = positions[n].get<int>();
    t.columns = staircase_columns(k, t.position);
    for (const auto& mj : terms[n]) t.modules.push_back(module_from_json(mj));
    if (t.columns.size() != t.modules.size()) {
      throw InvalidParameter("complex record: term width mismatch at position " +
                             std::to_string(t.position));
    }
    c.terms.push_back(std::move(t));
  }
  c.orders = block.at("orders").get<std::vector<int>>();
  if (!c.terms.empty() && c.orders.size() + 1 != c.terms.size()) {
    throw InvalidParameter("complex record: need exactly one order per consecutive pair");
  }
  return c;
}

nlohmann::ordered_json pipeline_json(const BggDiagram& bgg, const ComplexDescriptor* c) {
  OJson j;
  j["k"] = bgg.k();
  j["seed"] = weight_json(bgg.seed());
  j["vertices"] = OJson::array();
  for (const HasseVertex& v : bgg.diagram().vertices()) {
    OJson vj = vertex_json(v);
    vj["weight2"] = weight_json(bgg.weight_at(v));
    const DirectImage im = direct_image(bgg.weight_at(v));
    if (im.empty()) {
      vj["image"] = OJson{{"degree", nullptr}, {"weight2", nullptr}};
    } else {
      vj["image"] = OJson{{"degree", im.degree == ImageDegree::Degree0 ? 0 : 1},
                          {"weight2", weight_json(*im.weight)}};
    }
    j["vertices"].push_back(std::move(vj));
  }
  if (c != nullptr) {
    j["complex"] = complex_block_json(*c);
  } else {
    j["complex"] = nullptr;
  }
  return j;
}

std::string render_pushdown(const BggDiagram& bgg, OutputFormat fmt, bool half) {
  switch (fmt) {
    case OutputFormat::Text:
      return pushdown_text(bgg, half);
    case OutputFormat::Json: {
      if (bgg.seed() == canonical_seed(bgg.k())) {
        const ComplexDescriptor c = build_complex(bgg.k());
        return pipeline_json(bgg, &c).dump(2) + "\n";
      }
      return pipeline_json(bgg, nullptr).dump(2) + "\n";
    }
    default:
      throw InvalidParameter("direct images render as text or json only");
  }
}

// ---- complex ---------------------------------------------------------------

namespace {

std::string arrow_line(int order) {
  if (order == 2) return "  ==2==>\n";
  return "  --" + std::to_string(order) + "-->\n";
}

std::string slk_str(const std::vector<std::int64_t>& hw) {
  std::string s = "[";
  for (std::size_t m = 0; m < hw.size(); ++m) {
    if (m > 0) s += ",";
    s += std::to_string(hw[m]);
  }
  return s + "]";
}

std::string module_str(int i, int j, const ModuleDescriptor& d) {
  std::ostringstream os;
  os << module_label(i, j) << " " << slk_str(d.slk_hw) << "\u2297(" << d.so4_a << ","
     << d.so4_b << ") dim=" << d.dim;
  return os.str();
}

std::string complex_text(const ComplexDescriptor& c) {
  std::ostringstream os;
  os << "pushed-down complex  k=" << c.k << "\n";
  for (std::size_t n = 0; n < c.terms.size(); ++n) {
    const ComplexTerm& t = c.terms[n];
    os << "term " << n << " (row " << t.position << "):";
    for (std::size_t m = 0; m < t.modules.size(); ++m) {
      os << (m == 0 ? " " : "  ") << module_str(t.position, t.columns[m], t.modules[m]);
    }
    os << "\n";
    if (n + 1 < c.terms.size()) os << arrow_line(c.orders[n]);
  }
  return os.str();
}

}  // namespace

std::string render_complex(const BggDiagram& bgg, const ComplexDescriptor& c, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      return complex_text(c);
    case OutputFormat::Json:
      return pipeline_json(bgg, &c).dump(2) + "\n";
    default:
      throw InvalidParameter("the complex renders as text or json only");
  }
}

// ---- dims ------------------------------------------------------------------

namespace {

std::string dims_text(const ComplexDescriptor& c) {
  std::ostringstream os;
  os << "module dimensions  k=" << c.k << "\n";
  std::vector<std::int64_t> term_totals;
  for (const ComplexTerm& t : c.terms) {
    std::int64_t total = 0;
    for (std::size_t m = 0; m < t.modules.size(); ++m) {
      const ModuleDescriptor& d = t.modules[m];
      os << module_label(t.position, t.columns[m]) << ": sl" << c.k << " " << slk_str(d.slk_hw)
         << " dim " << weyl_dim_sl(d.slk_hw) << "  so4 (" << d.so4_a << "," << d.so4_b << ") dim "
         << dim_so4(d.so4_a, d.so4_b) << "  total " << d.dim << "\n";
      total += d.dim;
    }
    term_totals.push_back(total);
  }
  os << "term totals:";
  for (std::int64_t v : term_totals) os << " " << v;
  os << "\n";
  return os.str();
}

std::string dims_json(const ComplexDescriptor& c) {
  OJson j;
  j["k"] = c.k;
  j["modules"] = OJson::array();
  for (const ComplexTerm& t : c.terms) {
    for (std::size_t m = 0; m < t.modules.size(); ++m) {
      const ModuleDescriptor& d = t.modules[m];
      j["modules"].push_back(OJson{{"i", t.position},
                                   {"j", t.columns[m]},
                                   {"slk", d.slk_hw},
                                   {"so4", {d.so4_a, d.so4_b}},
                                   {"dim_slk", weyl_dim_sl(d.slk_hw)},
                                   {"dim_so4", dim_so4(d.so4_a, d.so4_b)},
                                   {"dim", d.dim}});
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_dims(const ComplexDescriptor& c, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      return dims_text(c);
    case OutputFormat::Json:
      return dims_json(c);
    default:
      throw InvalidParameter("dimension tables render as text or json only");
  }
}

}  // namespace kdirac
