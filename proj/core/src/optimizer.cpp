#include "racforge/optimizer.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "racforge/checker.hpp"
#include "racforge/errors.hpp"

namespace racforge {

using json = nlohmann::ordered_json;

void LayoutConfig::validate() const {
  if (step_size <= 0) throw InvalidParameter("step_size must be positive");
  if (max_iterations < 1) throw InvalidParameter("max_iterations must be >= 1");
  if (restarts < 1) throw InvalidParameter("restarts must be >= 1");
  if (rest_length <= 0) throw InvalidParameter("rest_length must be positive");
  if (spring_weight < 0 || repulsion_weight < 0 || crossing_weight < 0) {
    throw InvalidParameter("weights must be non-negative");
  }
  if (!(angle_tolerance_deg > 0 && angle_tolerance_deg <= 1)) {
    throw InvalidParameter("angle_tolerance_deg must lie in (0, 1]");
  }
  if (min_separation <= 0) throw InvalidParameter("min_separation must be positive");
}

namespace {

struct Indexed {
  const Graph* graph = nullptr;
  std::vector<std::pair<int, int>> edges;  // vertex indices
  std::unordered_map<VertexId, int> index;

  explicit Indexed(const Graph& g) : graph(&g) {
    int i = 0;
    for (const auto& v : g.vertices()) index[v] = i++;
    for (const auto& e : g.edges()) edges.emplace_back(index.at(e.u), index.at(e.v));
  }
};

using Coords = std::vector<double>;  // x0, y0, x1, y1, ...

Coords flatten(const Indexed& ix, const FloatDrawing& d) {
  Coords x(2 * ix.index.size());
  for (const auto& [v, p] : d.positions) {
    const int i = ix.index.at(v);
    x[2 * i] = p[0];
    x[2 * i + 1] = p[1];
  }
  return x;
}

FloatDrawing unflatten(const Indexed& ix, const Coords& x) {
  FloatDrawing d;
  d.graph = *ix.graph;
  for (const auto& [v, i] : ix.index) d.positions[v] = {x[2 * i], x[2 * i + 1]};
  return d;
}

bool edges_adjacent(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Strict proper crossing of two segments, double arithmetic.
bool proper_cross(const Coords& x, const std::pair<int, int>& e, const std::pair<int, int>& f) {
  const double ax = x[2 * e.first], ay = x[2 * e.first + 1];
  const double bx = x[2 * e.second], by = x[2 * e.second + 1];
  const double cx = x[2 * f.first], cy = x[2 * f.first + 1];
  const double dx = x[2 * f.second], dy = x[2 * f.second + 1];
  const double o1 = cross2(bx - ax, by - ay, cx - ax, cy - ay);
  const double o2 = cross2(bx - ax, by - ay, dx - ax, dy - ay);
  const double o3 = cross2(dx - cx, dy - cy, ax - cx, ay - cy);
  const double o4 = cross2(dx - cx, dy - cy, bx - cx, by - cy);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
         ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

std::vector<std::pair<int, int>> crossing_pairs(const Indexed& ix, const Coords& x) {
  std::vector<std::pair<int, int>> out;
  const auto& es = ix.edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (edges_adjacent(es[i], es[j])) continue;
      if (proper_cross(x, es[i], es[j])) out.emplace_back(static_cast<int>(i),
                                                          static_cast<int>(j));
    }
  }
  return out;
}

double cos2_angle(const Coords& x, const std::pair<int, int>& e, const std::pair<int, int>& f) {
  const double ux = x[2 * e.second] - x[2 * e.first];
  const double uy = x[2 * e.second + 1] - x[2 * e.first + 1];
  const double vx = x[2 * f.second] - x[2 * f.first];
  const double vy = x[2 * f.second + 1] - x[2 * f.first + 1];
  const double a = ux * vx + uy * vy;
  const double b = ux * ux + uy * uy;
  const double c = vx * vx + vy * vy;
  return (a * a) / (b * c);
}

double energy_impl(const Indexed& ix, const Coords& x, const LayoutConfig& cfg) {
  double e_cross = 0;
  for (const auto& [i, j] : crossing_pairs(ix, x)) {
    e_cross += cos2_angle(x, ix.edges[i], ix.edges[j]);
  }
  double e_spring = 0;
  for (const auto& [u, v] : ix.edges) {
    const double dx = x[2 * v] - x[2 * u];
    const double dy = x[2 * v + 1] - x[2 * u + 1];
    const double len = std::hypot(dx, dy);
    const double s = len - cfg.rest_length;
    e_spring += s * s;
  }
  double e_rep = 0;
  const int nv = static_cast<int>(ix.index.size());
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      const double dx = x[2 * v] - x[2 * u];
      const double dy = x[2 * v + 1] - x[2 * u + 1];
      const double dist = std::hypot(dx, dy);
      const double r = cfg.rest_length - dist;
      if (r > 0) e_rep += r * r;
    }
  }
  const double total = cfg.crossing_weight * e_cross + cfg.spring_weight * e_spring +
                       cfg.repulsion_weight * e_rep;
  if (!std::isfinite(total)) throw NonFinite("layout energy is not finite");
  return total;
}

Coords gradient_impl(const Indexed& ix, const Coords& x, const LayoutConfig& cfg) {
  Coords g(x.size(), 0.0);
  auto acc = [&](int vtx, double gx, double gy) {
    g[2 * vtx] += gx;
    g[2 * vtx + 1] += gy;
  };
  // Crossing term: depends only on the two edge directions.
  for (const auto& [i, j] : crossing_pairs(ix, x)) {
    const auto& e = ix.edges[i];
    const auto& f = ix.edges[j];
    const double ux = x[2 * e.second] - x[2 * e.first];
    const double uy = x[2 * e.second + 1] - x[2 * e.first + 1];
    const double vx = x[2 * f.second] - x[2 * f.first];
    const double vy = x[2 * f.second + 1] - x[2 * f.first + 1];
    const double a = ux * vx + uy * vy;
    const double b = ux * ux + uy * uy;
    const double c = vx * vx + vy * vy;
    const double w = cfg.crossing_weight;
    const double du_x = w * (2 * a / (b * c) * vx - 2 * a * a / (b * b * c) * ux);
    const double du_y = w * (2 * a / (b * c) * vy - 2 * a * a / (b * b * c) * uy);
    const double dv_x = w * (2 * a / (b * c) * ux - 2 * a * a / (b * c * c) * vx);
    const double dv_y = w * (2 * a / (b * c) * uy - 2 * a * a / (b * c * c) * vy);
    acc(e.second, du_x, du_y);
    acc(e.first, -du_x, -du_y);
    acc(f.second, dv_x, dv_y);
    acc(f.first, -dv_x, -dv_y);
  }
  for (const auto& [u, v] : ix.edges) {
    const double dx = x[2 * v] - x[2 * u];
    const double dy = x[2 * v + 1] - x[2 * u + 1];
    const double len = std::hypot(dx, dy);
    if (len < 1e-12) continue;
    const double f = 2 * cfg.spring_weight * (len - cfg.rest_length) / len;
    acc(v, f * dx, f * dy);
    acc(u, -f * dx, -f * dy);
  }
  const int nv = static_cast<int>(ix.index.size());
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      const double dx = x[2 * v] - x[2 * u];
      const double dy = x[2 * v + 1] - x[2 * u + 1];
      const double dist = std::hypot(dx, dy);
      if (dist >= cfg.rest_length || dist < 1e-12) continue;
      const double f = -2 * cfg.repulsion_weight * (cfg.rest_length - dist) / dist;
      acc(v, f * dx, f * dy);
      acc(u, -f * dx, -f * dy);
    }
  }
  for (double gi : g) {
    if (!std::isfinite(gi)) throw NonFinite("layout gradient is not finite");
  }
  return g;
}

struct RunOutcome {
  Coords x;
  double energy = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> energy_trace;
};

RunOutcome descend(const Indexed& ix, Coords x, const LayoutConfig& cfg) {
  RunOutcome out;
  double e = energy_impl(ix, x, cfg);
  out.energy_trace.push_back(e);
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    const Coords g = gradient_impl(ix, x, cfg);
    double gn2 = 0;
    for (double gi : g) gn2 += gi * gi;
    if (gn2 < 1e-16) {
      out.converged = true;
      break;
    }
    // Backtracking line search on the true piecewise energy: steps that
    // change the crossing set are accepted or rejected by their energy.
    double s = cfg.step_size / std::sqrt(gn2 + 1.0);
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      Coords trial = x;
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - s * g[k];
      const double et = energy_impl(ix, trial, cfg);
      if (et <= e - 1e-4 * s * gn2) {
        x = std::move(trial);
        e = et;
        out.energy_trace.push_back(e);
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) {
      out.converged = true;  // no admissible descent step left
      break;
    }
  }
  out.x = std::move(x);
  out.energy = e;
  out.iterations = iter;
  return out;
}

Coords random_init(const Indexed& ix, std::mt19937_64& rng, const LayoutConfig& cfg) {
  const int nv = static_cast<int>(ix.index.size());
  const double side = cfg.rest_length * std::sqrt(static_cast<double>(std::max(nv, 1)));
  std::uniform_real_distribution<double> uni(0.0, side);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Coords x(2 * nv);
    for (double& c : x) c = uni(rng);
    bool ok = true;
    for (int u = 0; u < nv && ok; ++u) {
      for (int v = u + 1; v < nv; ++v) {
        const double dx = x[2 * v] - x[2 * u], dy = x[2 * v + 1] - x[2 * u + 1];
        if (std::hypot(dx, dy) < cfg.min_separation) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return x;
  }
  throw InvalidParameter("could not sample an initial layout above min_separation");
}

std::optional<double> min_crossing_angle(const Indexed& ix, const Coords& x) {
  std::optional<double> out;
  for (const auto& [i, j] : crossing_pairs(ix, x)) {
    const double c2 = cos2_angle(x, ix.edges[i], ix.edges[j]);
    const double ang = std::acos(std::sqrt(std::min(1.0, c2))) * 180.0 / M_PI;
    if (!out || ang < *out) out = ang;
  }
  return out;
}

}  // namespace

std::vector<std::pair<EdgeKey, EdgeKey>> float_crossings(const FloatDrawing& d) {
  const Indexed ix(d.graph);
  const Coords x = flatten(ix, d);
  std::vector<std::pair<EdgeKey, EdgeKey>> out;
  for (const auto& [i, j] : crossing_pairs(ix, x)) {
    out.emplace_back(d.graph.edges()[i], d.graph.edges()[j]);
  }
  return out;
}

double energy(const FloatDrawing& d, const LayoutConfig& cfg) {
  cfg.validate();
  const Indexed ix(d.graph);
  return energy_impl(ix, flatten(ix, d), cfg);
}

std::vector<double> gradient(const FloatDrawing& d, const LayoutConfig& cfg) {
  cfg.validate();
  const Indexed ix(d.graph);
  return gradient_impl(ix, flatten(ix, d), cfg);
}

std::pair<FloatDrawing, OptReport> optimize(const Graph& g, const LayoutConfig& cfg) {
  cfg.validate();
  const Indexed ix(g);
  OptReport report;
  std::optional<RunOutcome> best;
  bool best_near = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
    RunOutcome run = descend(ix, random_init(ix, rng, cfg), cfg);
    const auto ang = min_crossing_angle(ix, run.x);
    const bool near =
        !ang.has_value() || *ang >= 90.0 - cfg.angle_tolerance_deg;
    RestartSummary sum;
    sum.index = r;
    sum.energy = run.energy;
    sum.min_angle_deg = ang;
    sum.near_rac = near;
    sum.iterations = run.iterations;
    sum.converged = run.converged;
    report.restart_trace.push_back(sum);
    const bool better = !best || (near && !best_near) ||
                        (near == best_near && run.energy < best->energy);
    if (better) {
      best = std::move(run);
      best_near = near;
    }
  }
  report.final_energy = best->energy;
  report.iterations = best->iterations;
  report.converged = best->converged;
  report.energy_trace = best->energy_trace;
  report.min_crossing_angle_deg = min_crossing_angle(ix, best->x);
  FloatDrawing out = unflatten(ix, best->x);
  const NearRacResult cls = classify_near_rac(out, cfg.angle_tolerance_deg);
  if (cls.near_rac && cls.embedding) {
    report.embedding_class = canonical_class_code(*cls.embedding);
  }
  return {std::move(out), std::move(report)};
}

NearRacResult classify_near_rac(const FloatDrawing& d, double eps_deg) {
  NearRacResult out;
  constexpr double kTol = 1e-9;
  const Indexed ix(d.graph);
  const Coords x = flatten(ix, d);
  const int nv = static_cast<int>(ix.index.size());
  // Tolerance degeneracy predicates: vertex near a non-incident edge.
  for (int v = 0; v < nv; ++v) {
    const double px = x[2 * v], py = x[2 * v + 1];
    for (std::size_t ei = 0; ei < ix.edges.size(); ++ei) {
      const auto& [a, b] = ix.edges[ei];
      if (a == v || b == v) continue;
      const double ax = x[2 * a], ay = x[2 * a + 1];
      const double bx = x[2 * b], by = x[2 * b + 1];
      const double lx = bx - ax, ly = by - ay;
      const double len2 = lx * lx + ly * ly;
      if (len2 < kTol) return out;  // collapsed edge
      double t = ((px - ax) * lx + (py - ay) * ly) / len2;
      t = std::clamp(t, 0.0, 1.0);
      const double qx = ax + t * lx - px, qy = ay + t * ly - py;
      if (std::hypot(qx, qy) <= kTol) return out;
    }
  }
  const auto pairs = crossing_pairs(ix, x);
  double min_angle = 90.0;
  for (const auto& [i, j] : pairs) {
    const double c2 = cos2_angle(x, ix.edges[i], ix.edges[j]);
    const double ang = std::acos(std::sqrt(std::min(1.0, c2))) * 180.0 / M_PI;
    min_angle = std::min(min_angle, ang);
  }
  if (!pairs.empty()) out.min_angle_deg = min_angle;
  if (!pairs.empty() && min_angle < 90.0 - eps_deg) return out;
  // Clean under tolerances: snap losslessly and read the exact embedding.
  try {
    const Drawing snapped = snap_to_rational(d);
    out.embedding = extract_embedding(snapped);
  } catch (const DegenerateDrawing&) {
    return out;
  } catch (const InvalidParameter&) {
    return out;
  }
  out.near_rac = true;
  return out;
}

SurveyResult survey_embeddings(const Graph& g, const LayoutConfig& cfg,
                               const std::vector<FloatDrawing>& seed_layouts) {
  cfg.validate();
  const Indexed ix(g);
  SurveyResult result;
  result.total_runs = cfg.restarts;
  std::map<std::string, std::map<std::string, int>> buckets;  // class -> exact code -> count
  const int cycle = static_cast<int>(seed_layouts.size()) + 1;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
    Coords init;
    const int pick = r % cycle;
    if (pick == 0 || seed_layouts.empty()) {
      init = random_init(ix, rng, cfg);
    } else {
      init = flatten(ix, seed_layouts[pick - 1]);
      std::normal_distribution<double> jitter(0.0, 0.02 * cfg.rest_length);
      for (double& c : init) c += jitter(rng);
    }
    RunOutcome run = descend(ix, init, cfg);
    const NearRacResult cls = classify_near_rac(unflatten(ix, run.x), cfg.angle_tolerance_deg);
    if (!cls.near_rac || !cls.embedding) continue;
    ++result.near_rac_runs;
    const std::string code = canonical_code(*cls.embedding);
    const std::string cls_code = canonical_class_code(*cls.embedding);
    buckets[cls_code][code] += 1;
  }
  for (const auto& [cls_code, sub] : buckets) {
    SurveyClass sc;
    sc.code = cls_code;
    for (const auto& [code, count] : sub) {
      sc.count += count;
      if (code == cls_code) {
        sc.sub_a += count;
      } else {
        sc.sub_b += count;
      }
    }
    result.classes.push_back(sc);
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const SurveyClass& a, const SurveyClass& b) {
              return a.count != b.count ? a.count > b.count : a.code < b.code;
            });
  return result;
}

FloatDrawing to_float(const Drawing& d) {
  FloatDrawing out;
  out.graph = d.graph;
  for (const auto& v : d.graph.vertices()) {
    const Point& p = d.at(v);
    out.positions[v] = {p.x.to_double(), p.y.to_double()};
  }
  return out;
}

Drawing snap_to_rational(const FloatDrawing& d) {
  Drawing out;
  out.graph = d.graph;
  for (const auto& [v, p] : d.positions) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
      throw NonFinite("cannot snap non-finite coordinate");
    }
    out.positions[v] = Point{Rational(mpq_class(p[0])), Rational(mpq_class(p[1]))};
  }
  out.validate();
  return out;
}

LayoutConfig config_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw SchemaError("not a JSON object", "/");
  LayoutConfig cfg;
  auto get = [&](const char* key, auto& slot) {
    if (!j.contains(key)) return;
    using T = std::decay_t<decltype(slot)>;
    if constexpr (std::is_same_v<T, int>) {
      if (!j[key].is_number_integer()) throw SchemaError("expected integer", std::string("/") + key);
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!j[key].is_number_unsigned() && !j[key].is_number_integer()) {
        throw SchemaError("expected integer seed", std::string("/") + key);
      }
    } else {
      if (!j[key].is_number()) throw SchemaError("expected number", std::string("/") + key);
    }
    slot = j[key].get<T>();
  };
  get("step_size", cfg.step_size);
  get("max_iterations", cfg.max_iterations);
  get("restarts", cfg.restarts);
  get("seed", cfg.seed);
  get("rest_length", cfg.rest_length);
  get("spring_weight", cfg.spring_weight);
  get("repulsion_weight", cfg.repulsion_weight);
  get("crossing_weight", cfg.crossing_weight);
  get("angle_tolerance_deg", cfg.angle_tolerance_deg);
  get("min_separation", cfg.min_separation);
  cfg.validate();
  return cfg;
}

std::string config_to_json(const LayoutConfig& cfg) {
  json j;
  j["step_size"] = cfg.step_size;
  j["max_iterations"] = cfg.max_iterations;
  j["restarts"] = cfg.restarts;
  j["seed"] = cfg.seed;
  j["rest_length"] = cfg.rest_length;
  j["spring_weight"] = cfg.spring_weight;
  j["repulsion_weight"] = cfg.repulsion_weight;
  j["crossing_weight"] = cfg.crossing_weight;
  j["angle_tolerance_deg"] = cfg.angle_tolerance_deg;
  j["min_separation"] = cfg.min_separation;
  return j.dump(2) + "\n";
}

std::string survey_to_json(const SurveyResult& s) {
  json j;
  j["total_runs"] = s.total_runs;
  j["near_rac_runs"] = s.near_rac_runs;
  json classes = json::array();
  for (const auto& c : s.classes) {
    json cj;
    cj["count"] = c.count;
    cj["sub_a"] = c.sub_a;
    cj["sub_b"] = c.sub_b;
    cj["code"] = c.code;
    classes.push_back(cj);
  }
  j["classes"] = classes;
  return j.dump(2) + "\n";
}

}  // namespace racforge
