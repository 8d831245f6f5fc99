#pragma once

#include <stdexcept>
#include <string>

namespace racforge {

struct InvalidParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidAttachment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Not3Sat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct UnsatAssignment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(const std::string& msg, const std::string& json_path)
      : std::runtime_error(msg + " (at " + json_path + ")"), path(json_path) {}
};

struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace racforge
