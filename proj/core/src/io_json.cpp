#include "racforge/io_json.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "racforge/errors.hpp"

namespace racforge {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("not valid JSON", "/");
  return j;
}

LabeledGraph graph_from_json(const json& j, const std::string& base_path) {
  if (!j.is_object()) throw SchemaError("graph must be an object", base_path);
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw SchemaError("missing \"vertices\" array", base_path + "/vertices");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw SchemaError("missing \"edges\" array", base_path + "/edges");
  }
  LabeledGraph out;
  std::size_t idx = 0;
  for (const auto& v : j["vertices"]) {
    const std::string path = base_path + "/vertices/" + std::to_string(idx++);
    if (!v.is_string()) throw SchemaError("vertex id must be a string", path);
    try {
      out.graph.add_vertex(v.get<std::string>());
    } catch (const InvalidParameter& e) {
      throw SchemaError(e.what(), path);
    }
  }
  idx = 0;
  for (const auto& e : j["edges"]) {
    const std::string path = base_path + "/edges/" + std::to_string(idx++);
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw SchemaError("edge must be a pair of vertex ids", path);
    }
    try {
      out.graph.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    } catch (const InvalidParameter& ex) {
      throw SchemaError(ex.what(), path);
    }
  }
  if (j.contains("roles")) {
    if (!j["roles"].is_object()) throw SchemaError("roles must be an object", base_path + "/roles");
    for (const auto& [name, val] : j["roles"].items()) {
      const std::string path = base_path + "/roles/" + name;
      std::vector<VertexId> ids;
      if (val.is_string()) {
        ids.push_back(val.get<std::string>());
      } else if (val.is_array()) {
        for (const auto& id : val) {
          if (!id.is_string()) throw SchemaError("role entry must be a vertex id", path);
          ids.push_back(id.get<std::string>());
        }
      } else {
        throw SchemaError("role must be an id or id list", path);
      }
      for (const auto& id : ids) {
        if (!out.graph.has_vertex(id)) {
          throw SchemaError("role names unknown vertex " + id, path);
        }
      }
      out.roles[name] = std::move(ids);
    }
  }
  return out;
}

json graph_to_json(const LabeledGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.graph.vertices()) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (const auto& e : g.graph.edges()) j["edges"].push_back(json::array({e.u, e.v}));
  if (!g.roles.empty()) {
    json roles = json::object();
    for (const auto& [name, ids] : g.roles) {
      if (ids.size() == 1) {
        roles[name] = ids[0];
      } else {
        roles[name] = ids;
      }
    }
    j["roles"] = roles;
  }
  return j;
}

Point point_from_json(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
    throw SchemaError("position must be a pair of rational strings", path);
  }
  try {
    return Point{Rational::parse(v[0].get<std::string>()),
                 Rational::parse(v[1].get<std::string>())};
  } catch (const InvalidParameter& e) {
    throw SchemaError(e.what(), path);
  }
}

Drawing drawing_from_json(const json& j, const std::string& ref_dir) {
  if (!j.is_object()) throw SchemaError("drawing must be an object", "/");
  if (!j.contains("graph")) throw SchemaError("missing \"graph\"", "/graph");
  LabeledGraph lg;
  if (j["graph"].is_string()) {
    if (ref_dir.empty()) {
      throw SchemaError("graph file reference needs a file context", "/graph");
    }
    const auto p = std::filesystem::path(ref_dir) / j["graph"].get<std::string>();
    lg = read_graph_file(p.string());
  } else {
    lg = graph_from_json(j["graph"], "/graph");
  }
  if (!j.contains("positions") || !j["positions"].is_object()) {
    throw SchemaError("missing \"positions\" object", "/positions");
  }
  Drawing d;
  d.graph = lg.graph;
  for (const auto& [id, val] : j["positions"].items()) {
    const std::string path = "/positions/" + id;
    if (!d.graph.has_vertex(id)) throw SchemaError("position for unknown vertex " + id, path);
    d.positions[id] = point_from_json(val, path);
  }
  for (const auto& v : d.graph.vertices()) {
    if (!d.positions.count(v)) {
      throw SchemaError("vertex without position: " + v, "/positions");
    }
  }
  try {
    d.validate();
  } catch (const InvalidParameter& e) {
    throw SchemaError(e.what(), "/positions");
  }
  return d;
}

}  // namespace

LabeledGraph read_graph_json(const std::string& text) {
  return graph_from_json(parse_json(text), "");
}

LabeledGraph read_graph_file(const std::string& path) {
  return read_graph_json(read_text_file(path));
}

std::string write_graph_json(const LabeledGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

Drawing read_drawing_json(const std::string& text) {
  return drawing_from_json(parse_json(text), "");
}

Drawing read_drawing_file(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return drawing_from_json(parse_json(read_text_file(path)), dir.empty() ? "." : dir);
}

std::string write_drawing_json(const Drawing& d) {
  json j;
  LabeledGraph lg;
  lg.graph = d.graph;
  j["graph"] = graph_to_json(lg);
  json pos = json::object();
  for (const auto& v : d.graph.vertices()) {
    const Point& p = d.at(v);
    pos[v] = json::array({p.x.str(), p.y.str()});
  }
  j["positions"] = pos;
  return j.dump(2) + "\n";
}

RoleMap read_labels_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("labels must be an object", "/");
  RoleMap out;
  for (const auto& [name, val] : j.items()) {
    const std::string path = "/" + name;
    if (val.is_string()) {
      out[name] = {val.get<std::string>()};
    } else if (val.is_array()) {
      std::vector<VertexId> ids;
      for (const auto& id : val) {
        if (!id.is_string()) throw SchemaError("label entry must be a vertex id", path);
        ids.push_back(id.get<std::string>());
      }
      out[name] = std::move(ids);
    } else {
      throw SchemaError("label must be an id or id list", path);
    }
  }
  return out;
}

RoleMap read_labels_file(const std::string& path) { return read_labels_json(read_text_file(path)); }

std::string write_labels_json(const RoleMap& roles) {
  json j = json::object();
  for (const auto& [name, ids] : roles) {
    if (ids.size() == 1) {
      j[name] = ids[0];
    } else {
      j[name] = ids;
    }
  }
  return j.dump(2) + "\n";
}

std::string write_report_json(const RacReport& r) {
  json j;
  j["is_rac"] = r.is_rac;
  j["crossing_count"] = r.crossings.size();
  json crossings = json::array();
  for (const auto& c : r.crossings) {
    json cj;
    cj["edge1"] = json::array({c.e1.u, c.e1.v});
    cj["edge2"] = json::array({c.e2.u, c.e2.v});
    cj["point"] = json::array({c.point.x.str(), c.point.y.str()});
    cj["perpendicular"] = c.perpendicular;
    crossings.push_back(cj);
  }
  j["crossings"] = crossings;
  json degs = json::array();
  for (const auto& d : r.degeneracies) degs.push_back(d.str());
  j["degeneracies"] = degs;
  json p1 = json::array();
  for (const auto& t : r.property1_violations) {
    p1.push_back(json::array({t[0].str(), t[1].str(), t[2].str()}));
  }
  j["property1_violations"] = p1;
  json p2 = json::array();
  for (const auto& v : r.property2_violations) {
    json vj;
    vj["triangle"] = json::array({v.triangle[0], v.triangle[1], v.triangle[2]});
    vj["apex"] = v.apex;
    vj["inside_neighbors"] = v.inside_neighbors;
    p2.push_back(vj);
  }
  j["property2_violations"] = p2;
  json pb = json::array();
  for (const auto& b : r.property2_boundary) {
    json bj;
    bj["triangle"] = json::array({b.triangle[0], b.triangle[1], b.triangle[2]});
    bj["vertex"] = b.vertex;
    pb.push_back(bj);
  }
  j["property2_boundary_incident"] = pb;
  if (r.min_angle_degrees) {
    j["min_angle_degrees"] = *r.min_angle_degrees;
  } else {
    j["min_angle_degrees"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write file: " + path);
  out << content;
}

}  // namespace racforge
