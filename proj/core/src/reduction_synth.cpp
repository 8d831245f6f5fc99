#include <algorithm>

#include "racforge/errors.hpp"
#include "racforge/reduction.hpp"

namespace racforge {

namespace {

const std::vector<VertexId>& role_or_throw(const RoleMap& roles, const std::string& key) {
  auto it = roles.find(key);
  if (it == roles.end()) throw InvalidParameter("labels missing role: " + key);
  return it->second;
}

}  // namespace

VertexId GadgetLabels::variable_endpoint(int var, int clause) const {
  return role_or_throw(roles,
                       "variable-endpoint:" + std::to_string(var) + ":" + std::to_string(clause))
      .at(0);
}

VertexId GadgetLabels::negated_endpoint(int var, int clause) const {
  return role_or_throw(roles,
                       "negated-endpoint:" + std::to_string(var) + ":" + std::to_string(clause))
      .at(0);
}

std::array<VertexId, 2> GadgetLabels::connectors(int tower) const {
  const auto& v = role_or_throw(roles, "connector:" + std::to_string(tower));
  if (v.size() != 2) throw InvalidParameter("connector role must name two vertices");
  return {v[0], v[1]};
}

std::array<VertexId, 3> GadgetLabels::clause_endpoints(int clause) const {
  const std::string base = "clause-endpoint:" + std::to_string(clause) + ":";
  return {role_or_throw(roles, base + "top").at(0), role_or_throw(roles, base + "bottom").at(0),
          role_or_throw(roles, base + "right").at(0)};
}

std::array<VertexId, 4> GadgetLabels::clause_trap(int clause) const {
  const auto& v = role_or_throw(roles, "clause-trap:" + std::to_string(clause));
  if (v.size() != 4) throw InvalidParameter("clause-trap role must name four vertices");
  return {v[0], v[1], v[2], v[3]};
}

VertexId GadgetLabels::path_mid(int clause, int literal_slot) const {
  return role_or_throw(roles,
                       "path-mid:" + std::to_string(clause) + ":" + std::to_string(literal_slot))
      .at(0);
}

std::vector<VertexId> GadgetLabels::corridor_boundary(int var, int gap, char side) const {
  return role_or_throw(roles, "corridor-boundary:" + std::to_string(var) + ":" +
                                  std::to_string(gap) + ":" + std::string(1, side));
}

const std::vector<VertexId>& GadgetLabels::tower_vertices(int var) const {
  return role_or_throw(roles, "tower:" + std::to_string(var));
}

const std::vector<VertexId>& GadgetLabels::dummy_tower(int which) const {
  return role_or_throw(roles, "dummy-tower:" + std::to_string(which));
}

const std::vector<VertexId>& GadgetLabels::skeleton_part(bool horizontal) const {
  return role_or_throw(roles,
                       horizontal ? "skeleton-part:horizontal" : "skeleton-part:vertical");
}

GadgetLabels GadgetLabels::from_roles(RoleMap roles) {
  GadgetLabels out;
  out.roles = std::move(roles);
  for (const auto& [key, ids] : out.roles) {
    (void)ids;
    if (key.rfind("tower:", 0) == 0) {
      out.num_variables = std::max(out.num_variables, std::stoi(key.substr(6)));
    } else if (key.rfind("clause-hub:", 0) == 0) {
      out.num_clauses = std::max(out.num_clauses, std::stoi(key.substr(11)));
    }
  }
  return out;
}

Assignment extract_assignment(const Drawing& d, const GadgetLabels& labels) {
  const int n = labels.num_variables;
  const int m = labels.num_clauses;
  Assignment a(n, false);
  for (int i = 1; i <= n; ++i) {
    const auto conn = labels.connectors(i);
    const Point& axis_lo = d.at(conn[0]);
    const Point& axis_hi = d.at(conn[1]);
    if (axis_lo == axis_hi) {
      throw InconsistentGeometry("tower " + std::to_string(i) + " has a degenerate axis");
    }
    int side = 0;
    for (int j = 1; j <= m; ++j) {
      const Point& ne = d.at(labels.negated_endpoint(i, j));
      const int o = orientation(axis_lo, axis_hi, ne);
      if (o == 0) {
        throw InconsistentGeometry("negated endpoint of x" + std::to_string(i) +
                                   " lies on the tower axis");
      }
      if (side == 0) {
        side = o;
      } else if (side != o) {
        throw InconsistentGeometry("negated endpoints of x" + std::to_string(i) +
                                   " lie on both sides of the tower axis");
      }
    }
    // Left of the upward connector axis encodes true.
    a[i - 1] = side > 0;
  }
  return a;
}

}  // namespace racforge
