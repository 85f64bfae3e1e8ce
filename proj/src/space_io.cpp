#include "psn/space_io.hpp"

#include <algorithm>
#include <sstream>

#include "psn/error.hpp"

namespace psn {

using nlohmann::json;

namespace {

Error bad(const std::string& what) { return Error(Errc::parse_error, what); }

int get_dim(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw bad("space JSON needs an integer field \"n\"");
  }
  return j["n"].get<int>();
}

VertexId get_id(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw bad("expected a vertex id");
  return static_cast<VertexId>(j.get<long long>());
}

void apply_ops(ColoredSpace& space, const json& ops) {
  if (!ops.is_array()) throw bad("\"ops\" must be an array");
  for (const json& op : ops) {
    if (!op.is_object() || !op.contains("letter") || !op["letter"].is_string()) {
      throw bad("each op needs a \"letter\" string");
    }
    Letter s = parse_letter(op["letter"].get<std::string>(), space.dim());
    space.apply_alpha(s, anchor_from_json(op.value("lo", json())),
                      anchor_from_json(op.value("hi", json())));
  }
}

}  // namespace

Anchor anchor_from_json(const json& j) {
  if (j.is_string()) {
    if (j == "bottom") return Anchor::bottom();
    if (j == "top") return Anchor::top();
    throw bad("anchor must be \"bottom\", \"top\" or a vertex id");
  }
  return Anchor::real(get_id(j));
}

json anchor_to_json(Anchor a) {
  if (a.is_real()) return a.vertex();
  return a.to_string();
}

ColoredSpace space_from_script(const json& script) {
  ColoredSpace space(get_dim(script));
  apply_ops(space, script.value("ops", json::array()));
  return space;
}

json space_to_json(const ColoredSpace& space) {
  json j;
  j["n"] = space.dim();
  j["vertices"] = json::array();
  for (VertexId v = 0; v < space.num_vertices(); ++v) {
    j["vertices"].push_back({{"id", v}, {"level", space.level(v)}});
  }
  j["edges"] = json::array();
  for (auto [a, b] : space.edges()) j["edges"].push_back({a, b});
  if (space.built_by_alpha()) {
    j["build_log"] = json::array();
    for (const BuildStep& step : space.build_log()) {
      j["build_log"].push_back({{"letter", to_string(step.letter)},
                                {"lo", anchor_to_json(step.lo)},
                                {"hi", anchor_to_json(step.hi)},
                                {"created", step.created}});
    }
  }
  return j;
}

ColoredSpace space_from_json(const json& j) {
  const int n = get_dim(j);
  if (j.contains("build_log")) {
    ColoredSpace space(n);
    apply_ops(space, j["build_log"]);
    if (j.contains("vertices") || j.contains("edges")) {
      json again = space_to_json(space);
      if (j.value("vertices", json::array()) != again["vertices"] ||
          j.value("edges", json::array()) != again["edges"]) {
        throw bad("build_log does not reproduce the listed vertices and edges");
      }
    }
    return space;
  }
  ColoredSpace space(n);
  const json& vertices = j.value("vertices", json::array());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const json& v = vertices[k];
    if (!v.is_object() || get_id(v.value("id", json())) != k) {
      throw bad("vertices must be listed with ids 0,1,2,... in order");
    }
    space.add_vertex(v.value("level", -1));
  }
  for (const json& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw bad("edges must be [a, b] pairs");
    VertexId a = get_id(e[0]), b = get_id(e[1]);
    space.check_vertex(a);
    space.check_vertex(b);
    space.add_edge(a, b);
  }
  return space;
}

ColoredSpace load_space(const json& j) {
  if (j.is_object() && j.contains("ops")) return space_from_script(j);
  return space_from_json(j);
}

std::string to_dot(const ColoredSpace& space) {
  std::ostringstream out;
  out << "graph pseudospace {\n  rankdir=BT;\n";
  for (int i = 0; i <= space.dim(); ++i) {
    out << "  { rank=same;";
    for (VertexId v : space.at_level(i)) {
      out << " v" << v << " [label=\"v" << v << "@" << i << "\"];";
    }
    out << " }\n";
  }
  for (auto [a, b] : space.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

json flag_to_json(const Flag& F) { return json(F); }

Flag flag_from_json(const json& j) {
  if (!j.is_array()) throw bad("a flag is a JSON array of vertex ids");
  Flag F;
  for (const json& v : j) F.push_back(get_id(v));
  return F;
}

}  // namespace psn
