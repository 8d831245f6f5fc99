#pragma once

#include <string>

#include "racforge/checker.hpp"
#include "racforge/graph.hpp"

namespace racforge {

/// Graph schema: {"vertices": [id...], "edges": [[id,id]...], "roles": {name: id | [id...]}}.
/// Roles are optional. Malformed documents raise SchemaError with a JSON path.
LabeledGraph read_graph_json(const std::string& text);
LabeledGraph read_graph_file(const std::string& path);
std::string write_graph_json(const LabeledGraph& g);

/// Drawing schema: {"graph": <inline graph or file path>, "positions": {id: ["p/q","r/s"]}}.
/// File references are resolved relative to the drawing file's directory.
Drawing read_drawing_json(const std::string& text);
Drawing read_drawing_file(const std::string& path);
std::string write_drawing_json(const Drawing& d);

RoleMap read_labels_json(const std::string& text);
RoleMap read_labels_file(const std::string& path);
std::string write_labels_json(const RoleMap& roles);

/// RacReport as JSON with stable field order.
std::string write_report_json(const RacReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace racforge
