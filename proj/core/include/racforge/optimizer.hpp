#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "racforge/embedding.hpp"
#include "racforge/graph.hpp"

namespace racforge {

/// Continuous relaxation of Drawing for the numerical search.
struct FloatDrawing {
  Graph graph;
  std::unordered_map<VertexId, std::array<double, 2>> positions;
};

struct LayoutConfig {
  double step_size = 0.25;
  int max_iterations = 2000;
  int restarts = 50;
  std::uint64_t seed = 1;
  double rest_length = 4.0;
  double spring_weight = 0.05;
  double repulsion_weight = 0.02;
  double crossing_weight = 2000.0;
  double angle_tolerance_deg = 0.1;
  double min_separation = 1e-3;

  void validate() const;  // throws InvalidParameter
};

struct RestartSummary {
  int index = 0;
  double energy = 0;
  std::optional<double> min_angle_deg;
  bool near_rac = false;
  int iterations = 0;
  bool converged = false;
};

struct OptReport {
  double final_energy = 0;
  std::optional<double> min_crossing_angle_deg;
  int iterations = 0;
  bool converged = false;
  std::string embedding_class;  // canonical class code when near-RAC
  std::vector<RestartSummary> restart_trace;
  std::vector<double> energy_trace;  // accepted-iterate energies of the best restart
};

/// Crossing pairs of the float drawing (strict proper crossings of
/// non-adjacent edges, double arithmetic).
std::vector<std::pair<EdgeKey, EdgeKey>> float_crossings(const FloatDrawing& d);

/// E = w_c * sum cos^2(theta) + w_s * sum (len - L)^2 + w_r * sum max(0, L - dist)^2.
/// The crossing term vanishes exactly when every crossing is perpendicular.
/// The repulsion radius is the spring rest length. Throws NonFinite.
double energy(const FloatDrawing& d, const LayoutConfig& cfg);

/// Analytic gradient, flattened (x0, y0, x1, y1, ...) in graph vertex order.
std::vector<double> gradient(const FloatDrawing& d, const LayoutConfig& cfg);

/// Gradient descent with backtracking line search over cfg.restarts seeded
/// random initial layouts; deterministic given (g, cfg). Returns the best
/// layout (near-RAC preferred, then lowest energy).
std::pair<FloatDrawing, OptReport> optimize(const Graph& g, const LayoutConfig& cfg);

struct NearRacResult {
  bool near_rac = false;
  std::optional<PlanarizedEmbedding> embedding;
  std::optional<double> min_angle_deg;
};

/// Near-RAC iff degeneracy-free under 1e-9 tolerance predicates and every
/// crossing angle is at least 90 - eps_deg. The embedding is read off the
/// drawing after a lossless dyadic snap to rationals.
NearRacResult classify_near_rac(const FloatDrawing& d, double eps_deg);

struct SurveyClass {
  std::string code;  // mirror-merged canonical class code
  int count = 0;
  int sub_a = 0;  // runs landing on the class's lexicographically smaller code
  int sub_b = 0;
};

struct SurveyResult {
  std::vector<SurveyClass> classes;
  int near_rac_runs = 0;
  int total_runs = 0;
};

/// Runs optimize restarts, classifies near-RAC outcomes and buckets them by
/// embedding class, merging mirror pairs. Optional seed layouts are cycled
/// into the restart schedule as perturbed initial states.
SurveyResult survey_embeddings(const Graph& g, const LayoutConfig& cfg,
                               const std::vector<FloatDrawing>& seed_layouts = {});

FloatDrawing to_float(const Drawing& d);
/// Lossless: every double is a dyadic rational.
Drawing snap_to_rational(const FloatDrawing& d);

LayoutConfig config_from_json(const std::string& text);
std::string config_to_json(const LayoutConfig& cfg);
std::string survey_to_json(const SurveyResult& s);

}  // namespace racforge
