#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "racforge/antiprism.hpp"
#include "racforge/checker.hpp"
#include "racforge/cnf.hpp"
#include "racforge/embedding.hpp"
#include "racforge/errors.hpp"
#include "racforge/io_json.hpp"
#include "racforge/optimizer.hpp"
#include "racforge/reduction.hpp"
#include "racforge/svg.hpp"

namespace rf = racforge;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kInputError = 2;

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("RACFORGE_SEED");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (...) {
    throw rf::InvalidParameter("RACFORGE_SEED is not an unsigned integer");
  }
}

rf::Assignment parse_assignment(const std::string& s) {
  rf::Assignment a;
  for (char c : s) {
    if (c == '0') {
      a.push_back(false);
    } else if (c == '1') {
      a.push_back(true);
    } else {
      throw rf::InvalidParameter("assignment must be a string of 0/1, got '" +
                                 std::string(1, c) + "'");
    }
  }
  return a;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    rf::write_text_file(out_path, content);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"racforge: right-angle-crossing drawing toolkit"};
  app.require_subcommand(1);

  // gen-antiprism
  auto* gen = app.add_subcommand("gen-antiprism", "Generate the augmented k-gon antiprism graph");
  int gen_k = 4;
  std::string gen_out;
  gen->add_option("--k", gen_k, "Ring size k (>= 3)")->required();
  gen->add_option("--out", gen_out, "Output graph JSON (default stdout)");

  // extend
  auto* ext = app.add_subcommand("extend", "Glue two antiprism-style graphs along their attach roles");
  std::string ext_a, ext_b, ext_mode = "horizontal", ext_out;
  ext->add_option("--a", ext_a, "First graph JSON")->required();
  ext->add_option("--b", ext_b, "Second graph JSON")->required();
  ext->add_option("--mode", ext_mode, "horizontal|vertical")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  ext->add_option("--out", ext_out, "Output graph JSON (default stdout)");

  // compile-cnf
  auto* cc = app.add_subcommand("compile-cnf", "Compile a 3-SAT instance into its reduction graph");
  std::string cc_cnf, cc_graph, cc_labels;
  cc->add_option("--cnf", cc_cnf, "DIMACS CNF input")->required();
  cc->add_option("--out-graph", cc_graph, "Output graph JSON");
  cc->add_option("--out-labels", cc_labels, "Output labels JSON");

  // synthesize
  auto* sy = app.add_subcommand("synthesize", "Draw the reduction graph from a satisfying assignment");
  std::string sy_cnf, sy_assign, sy_out;
  sy->add_option("--cnf", sy_cnf, "DIMACS CNF input")->required();
  sy->add_option("--assignment", sy_assign, "Assignment as a 0/1 string, x1 first")->required();
  sy->add_option("--out-drawing", sy_out, "Output drawing JSON (default stdout)");

  // check
  auto* ch = app.add_subcommand("check", "Exact validity check of a drawing");
  std::string ch_drawing, ch_report;
  ch->add_option("--drawing", ch_drawing, "Drawing JSON")->required();
  ch->add_option("--report", ch_report, "Write the full report JSON here");

  // diagnose
  auto* dg = app.add_subcommand("diagnose", "Report crossing/property diagnostics of a drawing");
  std::string dg_drawing, dg_report;
  dg->add_option("--drawing", dg_drawing, "Drawing JSON")->required();
  dg->add_option("--report", dg_report, "Write the report JSON here (default stdout)");

  // optimize
  auto* op = app.add_subcommand("optimize", "Numerical search for a near-RAC layout");
  std::string op_graph, op_config, op_out, op_report;
  std::uint64_t op_seed = 0;
  bool op_seed_set = false;
  op->add_option("--graph", op_graph, "Graph JSON")->required();
  op->add_option("--config", op_config, "Layout config JSON");
  op->add_option("--seed", op_seed, "Override RNG seed")->each([&](const std::string&) {
    op_seed_set = true;
  });
  op->add_option("--out-drawing", op_out, "Output drawing JSON of the best layout");
  op->add_option("--out-report", op_report, "Output optimizer report JSON");

  // survey
  auto* sv = app.add_subcommand("survey", "Survey embedding classes over optimizer restarts");
  std::string sv_graph, sv_config, sv_out;
  int sv_restarts = 0;
  std::vector<std::string> sv_seeds;
  sv->add_option("--graph", sv_graph, "Graph JSON")->required();
  sv->add_option("--config", sv_config, "Layout config JSON");
  sv->add_option("--restarts", sv_restarts, "Number of restarts (overrides config)");
  sv->add_option("--seed-drawing", sv_seeds, "Drawing JSON used as a perturbed restart seed");
  sv->add_option("--out", sv_out, "Output survey JSON (default stdout)");

  // svg
  auto* sg = app.add_subcommand("svg", "Render a drawing to SVG");
  std::string sg_drawing, sg_out, sg_labels;
  double sg_scale = 20.0;
  bool sg_no_crossings = false;
  std::vector<std::string> sg_roles;
  sg->add_option("--drawing", sg_drawing, "Drawing JSON")->required();
  sg->add_option("--out", sg_out, "Output SVG file (default stdout)");
  sg->add_option("--scale", sg_scale, "Pixels per drawing unit");
  sg->add_flag("--no-crossings", sg_no_crossings, "Do not mark right-angle crossings");
  sg->add_option("--highlight-role", sg_roles, "Role name to color (repeatable)");
  sg->add_option("--labels", sg_labels, "Labels JSON supplying the roles");

  // extract-assignment
  auto* ea = app.add_subcommand("extract-assignment", "Read a truth assignment off a drawing");
  std::string ea_drawing, ea_labels;
  ea->add_option("--drawing", ea_drawing, "Drawing JSON")->required();
  ea->add_option("--labels", ea_labels, "Labels JSON from compile-cnf")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    const rf::LabeledGraph g = rf::augmented_antiprism(gen_k);
    emit(gen_out, rf::write_graph_json(g));
    return kOk;
  }
  if (ext->parsed()) {
    const rf::LabeledGraph a = rf::read_graph_file(ext_a);
    const rf::LabeledGraph b = rf::read_graph_file(ext_b);
    const auto mode =
        ext_mode == "vertical" ? rf::ExtendMode::Vertical : rf::ExtendMode::Horizontal;
    emit(ext_out, rf::write_graph_json(rf::extend(a, b, mode)));
    return kOk;
  }
  if (cc->parsed()) {
    const rf::CnfFormula f = rf::parse_dimacs(rf::read_text_file(cc_cnf));
    const rf::CompileResult res = rf::compile(f);
    if (!cc_graph.empty()) rf::write_text_file(cc_graph, rf::write_graph_json(res.graph));
    if (!cc_labels.empty()) {
      rf::write_text_file(cc_labels, rf::write_labels_json(res.labels.roles));
    }
    std::cout << "compiled: " << res.graph.graph.vertex_count() << " vertices, "
              << res.graph.graph.edge_count() << " edges\n";
    return kOk;
  }
  if (sy->parsed()) {
    const rf::CnfFormula f = rf::parse_dimacs(rf::read_text_file(sy_cnf));
    const rf::Drawing d = rf::synthesize_drawing(f, parse_assignment(sy_assign));
    emit(sy_out, rf::write_drawing_json(d));
    return kOk;
  }
  if (ch->parsed()) {
    const rf::Drawing d = rf::read_drawing_file(ch_drawing);
    const rf::RacReport r = rf::check_rac(d);
    if (!ch_report.empty()) rf::write_text_file(ch_report, rf::write_report_json(r));
    std::cout << (r.is_rac ? "RAC" : "not RAC") << ": " << r.crossings.size() << " crossings";
    if (r.min_angle_degrees) std::cout << ", min angle " << *r.min_angle_degrees;
    std::cout << "\n";
    return r.is_rac ? kOk : kDomainFailure;
  }
  if (dg->parsed()) {
    const rf::Drawing d = rf::read_drawing_file(dg_drawing);
    const rf::RacReport r = rf::check_rac(d);
    emit(dg_report, rf::write_report_json(r));
    return r.is_rac ? kOk : kDomainFailure;
  }
  if (op->parsed()) {
    rf::LayoutConfig cfg;
    if (!op_config.empty()) cfg = rf::config_from_json(rf::read_text_file(op_config));
    if (const auto es = env_seed()) cfg.seed = *es;
    if (op_seed_set) cfg.seed = op_seed;
    const rf::LabeledGraph g = rf::read_graph_file(op_graph);
    auto [layout, report] = rf::optimize(g.graph, cfg);
    if (!op_out.empty()) {
      rf::write_text_file(op_out, rf::write_drawing_json(rf::snap_to_rational(layout)));
    }
    std::ostringstream summary;
    summary << "energy " << report.final_energy;
    if (report.min_crossing_angle_deg) summary << ", min angle " << *report.min_crossing_angle_deg;
    summary << ", " << (report.converged ? "converged" : "max iterations") << "\n";
    if (!op_report.empty()) rf::write_text_file(op_report, summary.str());
    std::cout << summary.str();
    return kOk;
  }
  if (sv->parsed()) {
    rf::LayoutConfig cfg;
    if (!sv_config.empty()) cfg = rf::config_from_json(rf::read_text_file(sv_config));
    if (const auto es = env_seed()) cfg.seed = *es;
    if (sv_restarts > 0) cfg.restarts = sv_restarts;
    const rf::LabeledGraph g = rf::read_graph_file(sv_graph);
    std::vector<rf::FloatDrawing> seeds;
    for (const auto& path : sv_seeds) {
      seeds.push_back(rf::to_float(rf::read_drawing_file(path)));
    }
    const rf::SurveyResult res = rf::survey_embeddings(g.graph, cfg, seeds);
    emit(sv_out, rf::survey_to_json(res));
    return kOk;
  }
  if (sg->parsed()) {
    const rf::Drawing d = rf::read_drawing_file(sg_drawing);
    rf::SvgOptions opts;
    opts.scale = sg_scale;
    opts.show_crossings = !sg_no_crossings;
    opts.highlight_roles = sg_roles;
    rf::RoleMap roles;
    if (!sg_labels.empty()) roles = rf::read_labels_file(sg_labels);
    emit(sg_out, rf::render_svg(d, opts, roles));
    return kOk;
  }
  if (ea->parsed()) {
    const rf::Drawing d = rf::read_drawing_file(ea_drawing);
    const rf::GadgetLabels labels =
        rf::GadgetLabels::from_roles(rf::read_labels_file(ea_labels));
    const rf::Assignment a = rf::extract_assignment(d, labels);
    for (bool b : a) std::cout << (b ? '1' : '0');
    std::cout << "\n";
    return kOk;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rf::UnsatAssignment& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const rf::InconsistentGeometry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const rf::DegenerateDrawing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const rf::InvalidAttachment& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const rf::NonFinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const rf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const rf::Not3Sat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const rf::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const rf::GraphMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const rf::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
