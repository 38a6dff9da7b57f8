#ifndef ESPEC_RUN_HPP
#define ESPEC_RUN_HPP

#include <string>
#include <vector>

#include "espec/serialize.hpp"

namespace espec {

// Free-fermion run: pipeline + grouping + classification, assembled into a
// reproducible document. Throws EngineMismatchError at U != 0 and
// propagates GaplessError.
SpectrumDocument run_free(const ModelParams& params, const CutSpec& cut,
                          const EngineOptions& options = {});

// Exact-diagonalization run at half filling.
SpectrumDocument run_ed(const ModelParams& params, const CutSpec& cut,
                        const EngineOptions& options = {});

struct ScanOutputs {
  std::vector<PhaseDiagramCell> cells;
  std::string csv;
  nlohmann::json document;
  std::string gnuplot_matrix;
};

ScanOutputs run_scan(const GridSpec& grid);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass = false;
};

// Built-in oracle suite: dimerized limits, independent dense reference at
// L = 4, cross-engine agreement at U = 0, the particle-hole map, trace
// normalization, zero-mode counts, and a mutation check proving the sign
// verification can fail.
ValidationReport run_validate();

std::string report_to_string(const ValidationReport& report);

}  // namespace espec

#endif
