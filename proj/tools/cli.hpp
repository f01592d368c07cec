#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mink/io.hpp"
#include "mink/mink.hpp"

namespace mink::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kError = 2 };

struct CliConfig {
  std::string output;  // empty: stdout

  unsigned walsh_k = 0;

  std::string construct_what;
  unsigned construct_n = 0;

  std::string body;
  std::string ball = "l1";
  std::string mode = "exact_lp";
  std::string cut;

  bool claims3 = false;
  unsigned prop = 0;
  bool certificate = false;
  std::size_t completeness_budget = PropositionOptions{}.completeness_facet_budget;
};

namespace detail {

inline void emit(const io::json& j, const CliConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ParseError("cannot write " + cfg.output);
  f << j.dump(2) << "\n";
}

}  // namespace detail

/// Runs one CLI invocation.  Reports go to `out` (or --output); errors are
/// written to `out` as {"error": {"kind", "message"}} with exit code 2.
/// `verify` exits 1 when any check fails.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diameters, widths, completeness and reducedness witnesses for polytopes under "
               "polyhedral norms"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("-o,--output", cfg.output, "write the JSON report to this file");

  auto* walsh = app.add_subcommand("walsh", "Walsh matrix of order 2^k");
  walsh->add_option("--k", cfg.walsh_k, "order exponent")->required()->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "emit a construction as body JSON");
  construct->add_option("what", cfg.construct_what, "tetra | simplex")
      ->required()
      ->check(CLI::IsMember({"tetra", "simplex"}));
  construct->add_option("--n", cfg.construct_n, "Walsh exponent for the simplex");

  auto add_body_ball = [&](CLI::App* sub) {
    sub->add_option("--body", cfg.body, "body JSON file")->required();
    sub->add_option("--ball", cfg.ball, "l1 | linf | ball JSON file")->capture_default_str();
  };
  auto* metrics = app.add_subcommand("metrics", "diameter, thickness and inball scale");
  add_body_ball(metrics);
  metrics->add_option("--mode", cfg.mode, "exact_lp | difference_body")
      ->check(CLI::IsMember({"exact_lp", "difference_body"}))
      ->capture_default_str();

  auto* complete = app.add_subcommand("complete", "decide diametrical completeness");
  add_body_ball(complete);

  auto* witness = app.add_subcommand("witness", "verify a cut, or search for a non-reducedness witness");
  add_body_ball(witness);
  witness->add_option("--cut", cfg.cut, "halfspace JSON file; searches when omitted");

  auto* verify = app.add_subcommand("verify", "re-run the dimension-3 claims or the Walsh-simplex items");
  auto* claims = verify->add_flag("--claims3", cfg.claims3, "tetrahedron K in l1^3");
  auto* prop = verify->add_option("--prop", cfg.prop, "Walsh exponent n in {2,3,4}");
  verify->add_flag("--certificate", cfg.certificate, "certify thickness by bounds instead of LP");
  verify->add_option("--completeness-budget", cfg.completeness_budget,
                     "largest ball hull (constraint count) for the completeness check in certificate mode")
      ->capture_default_str();
  claims->excludes(prop);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << io::error_json("usage", e.what()).dump(2) << "\n";
    err << app.help();
    return kError;
  }

  try {
    if (walsh->parsed()) {
      const QMat h = walsh_matrix(cfg.walsh_k);
      detail::emit({{"k", cfg.walsh_k}, {"order", h.rows()}, {"matrix", io::to_json(h)}, {"hadamard", is_hadamard(h)}},
                   cfg, out);
      return kOk;
    }
    if (construct->parsed()) {
      if (cfg.construct_what == "tetra") {
        detail::emit(io::to_json(tetrahedron_k()), cfg, out);
      } else {
        if (cfg.construct_n == 0) throw DomainError("construct simplex needs --n");
        detail::emit(io::to_json(walsh_simplex(cfg.construct_n)), cfg, out);
      }
      return kOk;
    }
    if (metrics->parsed() || complete->parsed() || witness->parsed()) {
      const VPolytope body = io::body_from_json(io::read_json_file(cfg.body));
      const PolytopalNorm ball = io::ball_from_spec(cfg.ball, body.dim());
      if (metrics->parsed()) {
        detail::emit(io::to_json(compute_metrics(body, ball, parse_thickness_mode(cfg.mode))), cfg, out);
      } else if (complete->parsed()) {
        auto j = io::to_json(is_complete(body, ball));
        j["vertex_diameter_realization"] = io::to_json(vertex_diameter_realization(body, ball));
        detail::emit(j, cfg, out);
      } else if (!cfg.cut.empty()) {
        const Halfspace h = io::halfspace_from_json(io::read_json_file(cfg.cut), body.dim());
        detail::emit(io::to_json(verify_reduction_witness(body, h, ball)), cfg, out);
      } else {
        const auto w = search_reduction_witness(body, ball);
        detail::emit({{"found", w.has_value()}, {"witness", w ? io::to_json(*w) : io::json(nullptr)}}, cfg, out);
      }
      return kOk;
    }
    if (verify->parsed()) {
      if (cfg.claims3) {
        const auto r = verify_claims_dim3();
        detail::emit(io::to_json(r), cfg, out);
        return r.passed() ? kOk : kCheckFailed;
      }
      if (cfg.prop == 0) throw DomainError("verify needs --claims3 or --prop N");
      PropositionOptions opts;
      opts.completeness_facet_budget = cfg.completeness_budget;
      const auto mode = (cfg.certificate || cfg.prop >= 4) ? ProofMode::certificate : ProofMode::exact;
      const auto r = verify_proposition(cfg.prop, mode, opts);
      detail::emit(io::to_json(r), cfg, out);
      return r.passed() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    out << io::error_json(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    return kError;
  } catch (const io::json::exception& e) {
    out << io::error_json("parse", e.what()).dump(2) << "\n";
    return kError;
  }
  return kError;
}

}  // namespace mink::cli
