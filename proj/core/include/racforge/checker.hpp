#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "racforge/graph.hpp"

namespace racforge {

/// Proper interior crossing between two non-adjacent drawn edges.
struct Crossing {
  EdgeKey e1;  // e1 < e2
  EdgeKey e2;
  Point point;
  bool perpendicular = false;
};

enum class DegeneracyKind { VertexOnEdge, CollinearOverlap, EndpointTouch };

struct Degeneracy {
  DegeneracyKind kind;
  std::optional<VertexId> vertex;  // VertexOnEdge
  EdgeKey e1;
  std::optional<EdgeKey> e2;  // pair kinds
  std::string str() const;
};

/// Raised when an operation requires a degeneracy-free drawing; names all
/// offending vertices and edge pairs.
struct DegenerateDrawing : std::runtime_error {
  std::vector<Degeneracy> offenders;
  explicit DegenerateDrawing(std::vector<Degeneracy> offs);
};

/// Triangle fence diagnostic: apex strictly outside the drawn triangle with
/// two or more graph neighbors strictly inside.
struct TriangleFenceViolation {
  std::array<VertexId, 3> triangle;
  VertexId apex;
  std::vector<VertexId> inside_neighbors;
};

/// Vertex lying exactly on a drawn triangle's boundary: neither inside nor
/// outside, reported separately from violations.
struct BoundaryIncident {
  std::array<VertexId, 3> triangle;
  VertexId vertex;
};

struct RacReport {
  std::vector<Crossing> crossings;
  bool is_rac = false;
  std::vector<Degeneracy> degeneracies;
  std::vector<std::array<EdgeKey, 3>> property1_violations;
  std::vector<TriangleFenceViolation> property2_violations;
  std::vector<BoundaryIncident> property2_boundary;
  std::optional<double> min_angle_degrees;
};

/// All proper crossings of non-adjacent edges, exact intersection points
/// included, sorted by edge pair. Throws DegenerateDrawing when the drawing
/// has vertex-on-edge, collinear-overlap, or non-adjacent endpoint touches.
std::vector<Crossing> enumerate_crossings(const Drawing& d);

/// Full validity report; degeneracies are reported, not thrown.
RacReport check_rac(const Drawing& d);

/// Triples of edges that pairwise properly cross.
std::vector<std::array<EdgeKey, 3>> diagnose_three_mutual(const Drawing& d);

struct TriangleFenceReport {
  std::vector<TriangleFenceViolation> violations;
  std::vector<BoundaryIncident> boundary;
};

/// For every graph 3-cycle drawn as a non-degenerate triangle, reports each
/// vertex strictly outside with at least two graph neighbors strictly inside.
TriangleFenceReport diagnose_triangle_fence(const Drawing& d);

enum class BoundVerdict { Within, Exceeds, NotApplicable };

struct BoundCheck {
  BoundVerdict verdict;
  long edges = 0;
  long bound = 0;
  bool tight = false;
  std::string rule;  // e.g. "4n-10"
};

/// Necessary straight-line edge-count bound |E| <= 4n-10 for n >= 4.
BoundCheck edge_bound_check(const Graph& g);

/// Planarity edge bound |E| <= 3n-6 for n >= 3 (informational witness).
BoundCheck planar_bound_check(const Graph& g);

}  // namespace racforge
