#include "espec/run.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "espec/errors.hpp"
#include "espec/reference.hpp"
#include "espec/util.hpp"

namespace espec {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SpectrumDocument assemble(const std::string& command, const ModelParams& params,
                          const CutSpec& cut, const EngineOptions& options,
                          EntanglementSpectrum spectrum, const EdRunInfo& info,
                          double rel_tol, double wall_time_s) {
  SpectrumDocument doc;
  doc.command = command;
  doc.params = params;
  doc.cut = cut;
  doc.options = options;
  doc.tool_version = kToolVersion;
  doc.wall_time_s = wall_time_s;
  doc.info = info;
  doc.groups = group_levels(spectrum, rel_tol);
  doc.signature = classify(doc.groups);
  doc.spectrum = std::move(spectrum);
  return doc;
}

}  // namespace

SpectrumDocument run_free(const ModelParams& params, const CutSpec& cut,
                          const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EntanglementSpectrum spectrum = free_entanglement_spectrum(params, cut, options.free_options());
  return assemble("free", params, cut, options, std::move(spectrum), EdRunInfo{},
                  options.group_rel_tol_free, seconds_since(start));
}

SpectrumDocument run_ed(const ModelParams& params, const CutSpec& cut,
                        const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EdRunInfo info;
  EntanglementSpectrum spectrum = ed_entanglement_spectrum(params, cut, options.ed_options(), &info);
  return assemble("ed", params, cut, options, std::move(spectrum), info,
                  options.group_rel_tol_ed, seconds_since(start));
}

ScanOutputs run_scan(const GridSpec& grid) {
  ScanOutputs outputs;
  outputs.cells = sweep(grid);
  outputs.csv = diagram_to_csv(outputs.cells);
  outputs.document = scan_to_json(grid, outputs.cells);
  outputs.gnuplot_matrix = multiplicity_matrix(grid, outputs.cells);
  return outputs;
}

ValidationReport run_validate() {
  ValidationReport report;
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  };
  const double four_ln_two = 4.0 * std::numbers::ln2;

  // 1. fully dimerized nontrivial limit: 16 exact levels at 4 ln 2
  try {
    SpectrumDocument doc = run_free({8, 1.0, -1.0, 0.0}, {4});
    bool pass = doc.spectrum.levels.size() == 16 && doc.spectrum.complete &&
                doc.signature.ground_multiplicity == 16;
    double worst = 0.0;
    for (const ESLevel& level : doc.spectrum.levels)
      worst = std::max(worst, std::abs(level.xi - four_ln_two));
    pass = pass && worst <= 1e-12;
    check("dimerized-16fold", pass,
          "16 levels at 4 ln 2; max |xi - 4 ln 2| = " + format_double(worst));
  } catch (const std::exception& e) {
    check("dimerized-16fold", false, e.what());
  }

  // 2. fully dimerized trivial limit: a single xi = 0 level
  try {
    SpectrumDocument doc = run_free({8, 1.0, 1.0, 0.0}, {4});
    bool pass = doc.spectrum.levels.size() == 1 && doc.spectrum.complete &&
                std::abs(doc.spectrum.levels[0].xi) <= 1e-12;
    check("dimerized-trivial", pass,
          std::to_string(doc.spectrum.levels.size()) + " level(s), xi = " +
              format_double(doc.spectrum.levels.empty() ? -1.0 : doc.spectrum.levels[0].xi));
  } catch (const std::exception& e) {
    check("dimerized-trivial", false, e.what());
  }

  // 3. independent dense reference at L = 4: energies and complete ES
  const ModelParams l4{4, 1.0, 0.4, 3.0};
  try {
    reference::GroundData oracle =
        reference::ground_entanglement(l4, BoundaryCondition::PBC, 2, 2, {2});
    SpectrumDocument doc = run_ed(l4, {2});
    double e0_err = std::abs(doc.info.energies[0] - oracle.e0);
    double e1_err = std::abs(doc.info.energies[1] - oracle.e1);
    double es_err = spectra_weight_mismatch(doc.spectrum, oracle.spectrum, 1e-13);
    bool pass = e0_err <= 1e-12 && e1_err <= 1e-12 && es_err <= 1e-12;
    check("dense-oracle-L4", pass,
          "E0 err " + format_double(e0_err) + ", E1 err " + format_double(e1_err) +
              ", ES err " + format_double(es_err));
  } catch (const std::exception& e) {
    check("dense-oracle-L4", false, e.what());
  }

  // 4. the dense-oracle check must have teeth: a string-free hop kernel is
  // a different operator and has to disagree with the reference
  try {
    SectorBasis basis = build_sector_basis(4, 2, 2);
    SectorHamiltonian broken(basis, l4, BoundaryCondition::PBC, true);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(broken.dense(), Eigen::EigenvaluesOnly);
    reference::SectorProblem oracle = reference::sector_problem(l4, BoundaryCondition::PBC, 2, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(oracle.hamiltonian, Eigen::EigenvaluesOnly);
    double diff = (solver.eigenvalues() - ref.eigenvalues()).cwiseAbs().maxCoeff();
    check("sign-mutation-detected", diff > 1e-6,
          "string-free kernel shifts the sector spectrum by " + format_double(diff));
  } catch (const std::exception& e) {
    check("sign-mutation-detected", false, e.what());
  }

  // 5. cross-engine agreement at U = 0
  try {
    ModelParams params{8, 1.0, -0.4, 0.0};
    EngineOptions wide;
    wide.max_levels = 1 << 12;
    wide.xi_window = 80.0;
    SpectrumDocument free_doc = run_free(params, {4}, wide);
    SpectrumDocument ed_doc = run_ed(params, {4}, wide);
    double mismatch = spectra_weight_mismatch(free_doc.spectrum, ed_doc.spectrum, 1e-12);
    check("cross-engine-U0-L8", mismatch <= 1e-9,
          "max weight mismatch " + format_double(mismatch));
  } catch (const std::exception& e) {
    check("cross-engine-U0-L8", false, e.what());
  }

  // 6. particle-hole map: (dt, U) vs (dt, -U) with n_downA -> L_A - n_downA
  try {
    SpectrumDocument plus = run_ed({8, 1.0, -0.4, 3.0}, {4});
    SpectrumDocument minus = run_ed({8, 1.0, -0.4, -3.0}, {4});
    EntanglementSpectrum relabeled = minus.spectrum;
    for (ESLevel& level : relabeled.levels) level.n_down = 4 - level.n_down;
    double mismatch = spectra_weight_mismatch(plus.spectrum, relabeled, 1e-12);
    check("particle-hole-map-L8", mismatch <= 1e-9,
          "max weight mismatch " + format_double(mismatch));
  } catch (const std::exception& e) {
    check("particle-hole-map-L8", false, e.what());
  }

  // 7. trace normalization of complete spectra
  try {
    EngineOptions wide;
    wide.max_levels = 1 << 14;
    wide.xi_window = 200.0;
    double worst = 0.0;
    for (double delta_t : {0.4, -0.4}) {
      SpectrumDocument doc = run_free({12, 1.0, delta_t, 0.0}, {6}, wide);
      if (!doc.spectrum.complete) throw std::runtime_error("expected a complete spectrum");
      worst = std::max(worst, std::abs(weight_sum(doc.spectrum) - 1.0));
    }
    SpectrumDocument ed_doc = run_ed({8, 1.0, -0.4, 3.0}, {4});
    worst = std::max(worst, std::abs(weight_sum(ed_doc.spectrum) - 1.0));
    check("trace-normalization", worst <= 1e-10, "max |sum(weights) - 1| = " + format_double(worst));
  } catch (const std::exception& e) {
    check("trace-normalization", false, e.what());
  }

  // 8. zero-mode count in the subsystem correlation spectrum at L = 200
  try {
    bool pass = true;
    std::ostringstream detail;
    for (double delta_t : {-0.2, -0.4, 0.2, 0.4}) {
      ModelParams params{200, 1.0, delta_t, 0.0};
      Eigen::MatrixXd h = build_hopping_matrix(params, BoundaryCondition::PBC);
      Eigen::MatrixXd g = ground_correlation_matrix(h, 100);
      std::vector<double> modes = mode_spectrum(subsystem_block(g, {100}));
      int tight = 0, loose = 0;
      for (double f : modes) {
        if (std::abs(f - 0.5) <= 1e-8) ++tight;
        if (std::abs(f - 0.5) <= 0.1) ++loose;
      }
      bool ok = delta_t < 0 ? tight == 2 : loose == 0;
      pass = pass && ok;
      detail << "dt=" << delta_t << ": " << tight << " within 1e-8, " << loose
             << " within 0.1; ";
    }
    check("zero-mode-count-L200", pass, detail.str());
  } catch (const std::exception& e) {
    check("zero-mode-count-L200", false, e.what());
  }

  report.all_pass = true;
  for (const ValidationCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
  return report;
}

std::string report_to_string(const ValidationReport& report) {
  std::ostringstream out;
  for (const ValidationCheck& check : report.checks)
    out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail << '\n';
  out << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
  return out.str();
}

}  // namespace espec
