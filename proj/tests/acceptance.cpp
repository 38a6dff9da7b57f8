// Acceptance suite: one check per criterion, each printing a single
// PASS/FAIL line. Run with a criterion number (1-9) or no argument for all.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "espec/analysis.hpp"
#include "espec/errors.hpp"
#include "espec/reference.hpp"
#include "espec/run.hpp"
#include "espec/scan.hpp"
#include "espec/serialize.hpp"

using namespace espec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double now_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// criterion 1: paper-scale free engine multiplicities, under 2 s per run
Outcome criterion_1() {
  Outcome outcome;
  outcome.pass = true;
  std::ostringstream detail;
  EngineOptions options;
  options.group_rel_tol_free = 1e-8;
  const std::vector<std::pair<double, int>> expectations{
      {0.2, 1}, {0.4, 1}, {-0.2, 16}, {-0.4, 16}};
  for (auto [delta_t, expected] : expectations) {
    auto start = std::chrono::steady_clock::now();
    SpectrumDocument doc = run_free({200, 1.0, delta_t, 0.0}, {100}, options);
    double elapsed = now_seconds(start);
    bool ok = doc.signature.ground_multiplicity == expected && elapsed < 2.0;
    outcome.pass = outcome.pass && ok;
    detail << "dt=" << delta_t << ": multiplicity " << doc.signature.ground_multiplicity
           << " (want " << expected << ", " << format_double(elapsed) << " s); ";
  }
  outcome.detail = detail.str();
  return outcome;
}

// criterion 2: cut-ratio robustness at L_A = 50
Outcome criterion_2() {
  Outcome outcome;
  EngineOptions options;
  options.group_rel_tol_free = 1e-8;
  auto start = std::chrono::steady_clock::now();
  SpectrumDocument doc = run_free({200, 1.0, -0.2, 0.0}, {50}, options);
  double elapsed = now_seconds(start);
  outcome.pass = doc.signature.ground_multiplicity == 16 && elapsed < 2.0;
  outcome.detail = "multiplicity " + std::to_string(doc.signature.ground_multiplicity) +
                   " (want 16), " + format_double(elapsed) + " s";
  return outcome;
}

// criterion 3: dimerized analytic oracle
Outcome criterion_3() {
  Outcome outcome;
  SpectrumDocument nontrivial = run_free({8, 1.0, -1.0, 0.0}, {4});
  double worst = 0.0;
  for (const ESLevel& level : nontrivial.spectrum.levels)
    worst = std::max(worst, std::abs(level.xi - 4.0 * std::numbers::ln2));
  bool sixteen = nontrivial.spectrum.levels.size() == 16 &&
                 nontrivial.signature.ground_multiplicity == 16 && worst <= 1e-12;

  SpectrumDocument trivial = run_free({8, 1.0, 1.0, 0.0}, {4});
  bool single = trivial.spectrum.levels.size() == 1 &&
                std::abs(trivial.spectrum.levels[0].xi) <= 1e-12;

  outcome.pass = sixteen && single;
  outcome.detail = "dt=-1: 16 levels, max |xi - 4 ln 2| = " + format_double(worst) +
                   "; dt=+1: " + std::to_string(trivial.spectrum.levels.size()) +
                   " level(s) at xi = " +
                   format_double(trivial.spectrum.levels.empty() ? -1.0
                                                                 : trivial.spectrum.levels[0].xi);
  return outcome;
}

// criterion 4: cross-engine equivalence at U = 0
Outcome criterion_4() {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  ModelParams params{8, 1.0, -0.4, 0.0};
  EngineOptions wide;
  wide.max_levels = 1 << 12;
  wide.xi_window = 80.0;
  SpectrumDocument free_doc = run_free(params, {4}, wide);
  SpectrumDocument ed_doc = run_ed(params, {4}, wide);
  double elapsed = now_seconds(start);
  double mismatch = spectra_weight_mismatch(free_doc.spectrum, ed_doc.spectrum, 1e-12);
  outcome.pass = free_doc.spectrum.complete && mismatch <= 1e-9 && elapsed < 30.0;
  outcome.detail = "max |weight difference| = " + format_double(mismatch) + " over " +
                   std::to_string(free_doc.spectrum.levels.size()) + " free / " +
                   std::to_string(ed_doc.spectrum.levels.size()) + " ed levels, " +
                   format_double(elapsed) + " s";
  return outcome;
}

// criterion 5: interacting degeneracies at desk scale. The quadruplet is a
// singlet plus an exact symmetry triplet with a measured finite-size weight
// splitting of 3e-2..5e-3 at these sizes, so grouping runs at the
// splitting-aware default tolerance; the multiplicity seen at the narrow
// 1e-6 tolerance and the measured splitting are reported alongside.
Outcome criterion_5() {
  Outcome outcome;
  outcome.pass = true;
  std::ostringstream detail;
  std::vector<std::pair<int, double>> sizes{{8, 60.0}, {10, 600.0}};
  if (std::getenv("ESPEC_ACCEPT_EXTENDED")) sizes.push_back({12, 3600.0});

  for (auto [sites, budget] : sizes) {
    auto start = std::chrono::steady_clock::now();
    const int cut = (sites / 2) & ~1;  // largest even length not above L/2
    for (double delta_t : {-0.4, 0.4})
      for (double u : {3.0, -3.0}) {
        SpectrumDocument doc = run_ed({sites, 1.0, delta_t, u}, {cut});
        int expected = delta_t < 0 ? 4 : 1;
        bool ok = doc.signature.ground_multiplicity == expected;
        outcome.pass = outcome.pass && ok;
        int narrow = ground_multiplicity(group_levels(doc.spectrum, 1e-6));
        detail << "L=" << sites << " dt=" << delta_t << " U=" << u << ": "
               << doc.signature.ground_multiplicity << " (want " << expected << ", split "
               << format_double(doc.signature.splitting) << ", " << narrow << " at 1e-6); ";
      }
    double elapsed = now_seconds(start);
    outcome.pass = outcome.pass && elapsed < budget;
    detail << "L=" << sites << " took " << format_double(elapsed) << " s; ";
  }
  if (!std::getenv("ESPEC_ACCEPT_EXTENDED"))
    detail << "L=12 tier skipped (set ESPEC_ACCEPT_EXTENDED=1)";
  outcome.detail = detail.str();
  return outcome;
}

// criterion 6: quadruplet label offsets and the measured split. Measured
// support is three cells with counts 1-2-1 (each virtual edge binds a pair
// or not), so offsets reach +-(2,2) on the diagonal (U < 0) and +-(2,-2) on
// the antidiagonal (U > 0); the multiplicity split is recorded, not
// asserted beyond the diagonal/antidiagonal structure.
Outcome criterion_6() {
  Outcome outcome;
  outcome.pass = true;
  std::ostringstream detail;
  for (double u : {-3.0, 3.0}) {
    SpectrumDocument doc = run_ed({8, 1.0, -0.4, u}, {4});
    const DegeneracyGroup& ground = doc.groups.front();
    bool four = ground.multiplicity == 4;
    bool offsets_ok = true;
    const int sign = u < 0 ? +1 : -1;
    for (std::size_t i = 0; i < ground.members.size(); ++i)
      for (std::size_t j = i + 1; j < ground.members.size(); ++j) {
        int ou = ground.members[i].n_up - ground.members[j].n_up;
        int od = ground.members[i].n_down - ground.members[j].n_down;
        offsets_ok = offsets_ok && ou == sign * od;
      }
    PhaseTag expected = u < 0 ? PhaseTag::FourfoldDiagonal : PhaseTag::FourfoldAntidiagonal;
    bool tagged = doc.signature.tag == expected;
    outcome.pass = outcome.pass && four && offsets_ok && tagged;
    detail << "U=" << u << ": " << signature_label(doc.signature) << ", split {";
    for (const auto& [label, count] : distribution(ground))
      detail << "(" << label.first << "," << label.second << "):" << count << " ";
    detail << "}; ";
  }
  outcome.detail = detail.str();
  return outcome;
}

// criterion 7: particle-hole map U -> -U with n_down -> L_A - n_down
Outcome criterion_7() {
  Outcome outcome;
  outcome.pass = true;
  std::ostringstream detail;
  for (double delta_t : {0.4, -0.4}) {
    SpectrumDocument plus = run_ed({8, 1.0, delta_t, 3.0}, {4});
    SpectrumDocument minus = run_ed({8, 1.0, delta_t, -3.0}, {4});
    EntanglementSpectrum relabeled = minus.spectrum;
    for (ESLevel& level : relabeled.levels) level.n_down = 4 - level.n_down;
    double mismatch = spectra_weight_mismatch(plus.spectrum, relabeled, 1e-12);
    outcome.pass = outcome.pass && mismatch <= 1e-9;
    detail << "dt=" << delta_t << ": max |weight difference| = " << format_double(mismatch)
           << "; ";
  }
  outcome.detail = detail.str();
  return outcome;
}

// criterion 8: phase-diagram reproduction and byte determinism
Outcome criterion_8() {
  Outcome outcome;
  GridSpec grid;
  grid.sites = 8;
  grid.subsystem_sites = 4;
  grid.delta_t_values = {-0.4, 0.4};
  grid.u_values = {-3.0, 0.0, 3.0};

  ScanOutputs first = run_scan(grid);
  auto tag_of = [&](double dt, double u) {
    for (const PhaseDiagramCell& cell : first.cells)
      if (cell.delta_t == dt && cell.u == u) return cell.signature.tag;
    return PhaseTag::Other;
  };
  bool structure = tag_of(-0.4, -3.0) == PhaseTag::FourfoldDiagonal &&
                   tag_of(-0.4, 0.0) == PhaseTag::Sixteenfold &&
                   tag_of(-0.4, 3.0) == PhaseTag::FourfoldAntidiagonal &&
                   tag_of(0.4, -3.0) == PhaseTag::NonDegenerate &&
                   tag_of(0.4, 0.0) == PhaseTag::NonDegenerate &&
                   tag_of(0.4, 3.0) == PhaseTag::NonDegenerate;

  ScanOutputs rerun = run_scan(grid);
  setenv("ESPEC_THREADS", "1", 1);
  ScanOutputs serial = run_scan(grid);
  setenv("ESPEC_THREADS", "5", 1);
  ScanOutputs parallel = run_scan(grid);
  unsetenv("ESPEC_THREADS");
  bool deterministic = first.csv == rerun.csv && first.csv == serial.csv &&
                       first.csv == parallel.csv &&
                       first.document.dump() == rerun.document.dump() &&
                       first.document.dump() == serial.document.dump() &&
                       first.document.dump() == parallel.document.dump();

  outcome.pass = structure && deterministic;
  outcome.detail = std::string("four-signature structure ") + (structure ? "ok" : "WRONG") +
                   "; rerun/worker-count determinism " + (deterministic ? "ok" : "BROKEN");
  return outcome;
}

// criterion 9: property suites
Outcome criterion_9() {
  Outcome outcome;
  outcome.pass = true;
  std::ostringstream detail;

  // trace normalization on complete spectra
  EngineOptions wide;
  wide.max_levels = 1 << 15;
  wide.xi_window = 1e9;
  double worst_trace = 0.0;
  for (double delta_t : {0.3, -0.3, -1.0, 1.0}) {
    SpectrumDocument doc = run_free({12, 1.0, delta_t, 0.0}, {6}, wide);
    if (!doc.spectrum.complete) outcome.pass = false;
    worst_trace = std::max(worst_trace, std::abs(weight_sum(doc.spectrum) - 1.0));
  }
  for (double u : {3.0, -3.0}) {
    SpectrumDocument doc = run_ed({8, 1.0, -0.4, u}, {4});
    worst_trace = std::max(worst_trace, std::abs(weight_sum(doc.spectrum) - 1.0));
    if (doc.info.residual >= 1e-10) outcome.pass = false;
    detail << "residual(U=" << u << ") = " << format_double(doc.info.residual) << "; ";
  }
  outcome.pass = outcome.pass && worst_trace <= 1e-10;
  detail << "max |trace - 1| = " << format_double(worst_trace) << "; ";

  // complement symmetry of the complete free spectrum at L <= 12
  for (int sites : {8, 12}) {
    ModelParams params{sites, 1.0, -0.25, 0.0};
    Eigen::MatrixXd h = build_hopping_matrix(params, BoundaryCondition::PBC);
    Eigen::MatrixXd g = ground_correlation_matrix(h, sites / 2);
    const int la = sites / 2;
    std::vector<double> modes_a = mode_spectrum(subsystem_block(g, {la}));
    Eigen::MatrixXd complement = g.bottomRightCorner(sites - la, sites - la);
    std::vector<double> modes_b = mode_spectrum(complement);
    auto spec_of = [&](const std::vector<double>& modes) {
      EntanglementSpectrum per_spin = enumerate_levels(modes, 1 << 15, 1e9);
      return combine_spins(per_spin, per_spin, 1 << 15);
    };
    EntanglementSpectrum spec_a = spec_of(modes_a), spec_b = spec_of(modes_b);
    bool ok = spec_a.complete && spec_b.complete && spec_a.levels.size() == spec_b.levels.size();
    double worst = 0.0;
    if (ok)
      for (std::size_t i = 0; i < spec_a.levels.size(); ++i)
        worst = std::max(worst, std::abs(spec_a.levels[i].xi - spec_b.levels[i].xi));
    ok = ok && worst <= 1e-9;
    outcome.pass = outcome.pass && ok;
    detail << "complement L=" << sites << ": max |xi difference| = " << format_double(worst)
           << "; ";
  }

  // dense 36-state oracle at L = 4
  ModelParams l4{4, 1.0, -0.3, 2.0};
  reference::GroundData oracle =
      reference::ground_entanglement(l4, BoundaryCondition::PBC, 2, 2, {2});
  SpectrumDocument doc = run_ed(l4, {2});
  double e_err = std::max(std::abs(doc.info.energies[0] - oracle.e0),
                          std::abs(doc.info.energies[1] - oracle.e1));
  double es_err = spectra_weight_mismatch(doc.spectrum, oracle.spectrum, 1e-13);
  bool oracle_ok = e_err <= 1e-12 && es_err <= 1e-12 && doc.info.residual < 1e-10;
  outcome.pass = outcome.pass && oracle_ok;
  detail << "dense oracle: energy err " << format_double(e_err) << ", ES err "
         << format_double(es_err);
  outcome.detail = detail.str();
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  using Check = Outcome (*)();
  const std::vector<std::pair<std::string, Check>> criteria{
      {"free engine paper scale (L=200, L_A=100)", criterion_1},
      {"cut-ratio robustness (L_A=50)", criterion_2},
      {"dimerized analytic oracle", criterion_3},
      {"cross-engine equivalence at U=0", criterion_4},
      {"interacting degeneracies (L=8,10[,12])", criterion_5},
      {"quadruplet distribution patterns", criterion_6},
      {"particle-hole map", criterion_7},
      {"phase-diagram reproduction + determinism", criterion_8},
      {"property suites (trace, complement, dense oracle, residuals)", criterion_9},
  };

  int first = 1, last = static_cast<int>(criteria.size());
  if (argc > 1) {
    first = last = std::atoi(argv[1]);
    if (first < 1 || first > static_cast<int>(criteria.size())) {
      std::cerr << "criterion number must lie in 1.." << criteria.size() << "\n";
      return 2;
    }
  }

  bool all_pass = true;
  for (int i = first; i <= last; ++i) {
    const auto& [name, check] = criteria[static_cast<std::size_t>(i - 1)];
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && outcome.pass;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << i << ": " << name
              << " -- " << outcome.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
