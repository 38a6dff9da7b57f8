// espec: entanglement-spectrum engines for the dimerized Hubbard chain.
// Subcommands: free (correlation-matrix engine), ed (sector Lanczos engine),
// scan (phase-diagram sweep), validate (built-in oracle suite).

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "espec/errors.hpp"
#include "espec/run.hpp"
#include "espec/util.hpp"

namespace {

using namespace espec;

struct CommonArgs {
  int sites = 0;
  int subsystem_sites = 0;
  double t = 1.0;
  double delta_t = 0.0;
  double hubbard_u = 0.0;
  EngineOptions options;
  std::string out_path;
  std::string format = "json";
  std::string plot_path;
};

void add_model_flags(CLI::App* cmd, CommonArgs& args, bool with_u) {
  cmd->add_option("--L", args.sites, "chain length (even, >= 4)")->required();
  cmd->add_option("--LA", args.subsystem_sites, "subsystem length (even, in [2, L-2])")->required();
  cmd->add_option("--dt", args.delta_t, "dimerization delta_t")->required();
  cmd->add_option("--t", args.t, "reference hopping")->capture_default_str();
  if (with_u) cmd->add_option("--U", args.hubbard_u, "on-site interaction U")->required();
  cmd->add_option("--out", args.out_path, "output file (stdout when omitted)");
  cmd->add_option("--format", args.format, "output format")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--plot", args.plot_path, "write a (n_total, xi) plot table to this file");
}

void emit_document(const SpectrumDocument& doc, const CommonArgs& args) {
  std::string payload = args.format == "csv" ? document_to_csv(doc)
                                             : document_to_json(doc).dump(2) + "\n";
  if (args.out_path.empty())
    std::cout << payload;
  else
    atomic_write_file(args.out_path, payload);
  if (!args.plot_path.empty()) atomic_write_file(args.plot_path, plot_table(doc));
}

std::vector<double> parse_axis(const std::vector<double>& values, const std::string& range,
                               const std::string& name) {
  if (!values.empty() && !range.empty())
    throw InvalidParamsError("give either " + name + "-values or " + name + "-range, not both");
  if (!values.empty()) return values;
  if (range.empty()) throw InvalidParamsError("missing " + name + " axis");
  // start:stop:count sugar, expanded before anything is persisted
  double start = 0, stop = 0;
  int count = 0;
  if (std::sscanf(range.c_str(), "%lf:%lf:%d", &start, &stop, &count) != 3 || count < 1)
    throw InvalidParamsError("range must be start:stop:count, got '" + range + "'");
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    axis.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return axis;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  } catch (const EngineMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  } catch (const NotConvergedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const GaplessError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGapless;
  } catch (const DegenerateGroundStateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerateGroundState;
  } catch (const SectorTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSectorTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidationFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement spectrum of the dimerized Hubbard chain"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "read options from a config file (flags override it)");
  app.require_subcommand(1);

  CommonArgs free_args;
  CLI::App* free_cmd = app.add_subcommand("free", "correlation-matrix engine (U = 0)");
  add_model_flags(free_cmd, free_args, false);
  free_cmd->add_option("--max-levels", free_args.options.max_levels, "level budget")->capture_default_str();
  free_cmd->add_option("--xi-window", free_args.options.xi_window,
                       "keep levels with xi <= xi_min + window")->capture_default_str();
  free_cmd->add_option("--rel-tol", free_args.options.group_rel_tol_free,
                       "degeneracy grouping tolerance")->capture_default_str();

  CommonArgs ed_args;
  CLI::App* ed_cmd = app.add_subcommand("ed", "sector Lanczos engine");
  add_model_flags(ed_cmd, ed_args, true);
  ed_cmd->add_option("--seed", ed_args.options.lanczos.seed, "start-vector seed")->capture_default_str();
  ed_cmd->add_option("--tol", ed_args.options.lanczos.tol, "Lanczos residual tolerance")->capture_default_str();
  ed_cmd->add_option("--max-iter", ed_args.options.lanczos.max_iter, "Lanczos iteration cap")->capture_default_str();
  ed_cmd->add_option("--rel-tol", ed_args.options.group_rel_tol_ed,
                     "degeneracy grouping tolerance")->capture_default_str();
  ed_cmd->add_option("--sector-cap", ed_args.options.sector_cap, "sector state cap")->capture_default_str();
  ed_cmd->add_option("--rdm-floor", ed_args.options.rdm_floor,
                     "drop RDM eigenvalues below this weight")->capture_default_str();
  ed_cmd->add_flag("--audit-sectors", ed_args.options.audit_sectors,
                   "also check the neighboring particle sectors for lower energy");

  GridSpec grid;
  std::vector<double> dt_values, u_values;
  std::string dt_range, u_range, engine_name = "auto";
  std::string scan_out, scan_json, scan_gnuplot;
  std::vector<std::string> phase_labels;
  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep a (delta_t, U) grid");
  scan_cmd->add_option("--L", grid.sites, "chain length")->required();
  scan_cmd->add_option("--LA", grid.subsystem_sites, "subsystem length")->required();
  scan_cmd->add_option("--t", grid.t, "reference hopping")->capture_default_str();
  scan_cmd->add_option("--dt-values", dt_values, "explicit delta_t list")->delimiter(',');
  scan_cmd->add_option("--dt-range", dt_range, "delta_t as start:stop:count");
  scan_cmd->add_option("--U-values", u_values, "explicit U list")->delimiter(',');
  scan_cmd->add_option("--U-range", u_range, "U as start:stop:count");
  scan_cmd->add_option("--engine", engine_name, "auto | free | ed")->capture_default_str()
      ->check(CLI::IsMember({"auto", "free", "ed"}));
  scan_cmd->add_option("--rel-tol-free", grid.free_rel_tol, "grouping tolerance, free engine")->capture_default_str();
  scan_cmd->add_option("--rel-tol-ed", grid.ed_rel_tol, "grouping tolerance, ed engine")->capture_default_str();
  scan_cmd->add_option("--seed", grid.ed_opts.lanczos.seed, "Lanczos seed")->capture_default_str();
  scan_cmd->add_option("--tol", grid.ed_opts.lanczos.tol, "Lanczos residual tolerance")->capture_default_str();
  scan_cmd->add_option("--max-iter", grid.ed_opts.lanczos.max_iter, "Lanczos iteration cap")->capture_default_str();
  scan_cmd->add_option("--sector-cap", grid.ed_opts.sector_cap, "sector state cap")->capture_default_str();
  scan_cmd->add_flag("--audit", grid.audit_free_cells,
                     "cross-check U = 0 cells against the ed engine (L <= 10)");
  scan_cmd->add_option("--phase-label", phase_labels,
                       "legend entry Tag=Label echoed into the JSON document (repeatable)");
  scan_cmd->add_option("--out", scan_out, "CSV output file (stdout when omitted)");
  scan_cmd->add_option("--json", scan_json, "also write the JSON document here");
  scan_cmd->add_option("--gnuplot", scan_gnuplot, "also write a multiplicity matrix here");

  CLI::App* validate_cmd = app.add_subcommand("validate", "run the built-in oracle suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return kExitInvalidParams;
  }

  if (free_cmd->parsed()) {
    return guarded([&] {
      ModelParams params{free_args.sites, free_args.t, free_args.delta_t, 0.0};
      emit_document(run_free(params, {free_args.subsystem_sites}, free_args.options), free_args);
      return kExitOk;
    });
  }

  if (ed_cmd->parsed()) {
    return guarded([&] {
      ModelParams params{ed_args.sites, ed_args.t, ed_args.delta_t, ed_args.hubbard_u};
      emit_document(run_ed(params, {ed_args.subsystem_sites}, ed_args.options), ed_args);
      return kExitOk;
    });
  }

  if (scan_cmd->parsed()) {
    return guarded([&] {
      grid.delta_t_values = parse_axis(dt_values, dt_range, "dt");
      grid.u_values = parse_axis(u_values, u_range, "U");
      grid.engine = engine_from_string(engine_name);
      ScanOutputs outputs = run_scan(grid);
      if (!phase_labels.empty()) {
        nlohmann::json legend = nlohmann::json::object();
        for (const std::string& entry : phase_labels) {
          auto eq = entry.find('=');
          if (eq == std::string::npos)
            throw InvalidParamsError("--phase-label expects Tag=Label, got '" + entry + "'");
          legend[entry.substr(0, eq)] = entry.substr(eq + 1);
        }
        outputs.document["phase_labels"] = legend;
      }
      if (scan_out.empty())
        std::cout << outputs.csv;
      else
        atomic_write_file(scan_out, outputs.csv);
      if (!scan_json.empty()) atomic_write_file(scan_json, outputs.document.dump(2) + "\n");
      if (!scan_gnuplot.empty()) atomic_write_file(scan_gnuplot, outputs.gnuplot_matrix);
      return kExitOk;
    });
  }

  if (validate_cmd->parsed()) {
    return guarded([&] {
      ValidationReport report = run_validate();
      std::cout << report_to_string(report);
      return report.all_pass ? kExitOk : kExitValidationFailure;
    });
  }

  return kExitInvalidParams;
}
