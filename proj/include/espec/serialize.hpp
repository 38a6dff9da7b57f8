#ifndef ESPEC_SERIALIZE_HPP
#define ESPEC_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "espec/analysis.hpp"
#include "espec/ed.hpp"
#include "espec/freefermion.hpp"
#include "espec/model.hpp"
#include "espec/scan.hpp"
#include "espec/spectrum.hpp"

namespace espec {

// Union of both engines' knobs; a document stores all of them so the
// metadata alone reproduces the run.
struct EngineOptions {
  int max_levels = 256;       // free engine
  double xi_window = 8.0;     // free engine
  double group_rel_tol_free = 1e-8;
  double group_rel_tol_ed = 0.1;  // covers the measured desk-scale quadruplet splitting
  LanczosOptions lanczos;     // ed engine
  int eigenpairs = 2;
  std::size_t sector_cap = 4'000'000;
  double rdm_floor = 1e-14;
  double gap_tol = 1e-8;
  bool audit_sectors = false;

  FreeEngineOptions free_options() const { return {max_levels, xi_window}; }
  EdOptions ed_options() const {
    return {lanczos, sector_cap, rdm_floor, gap_tol, audit_sectors};
  }
};

// Full result of one `free` or `ed` run, round-trippable through JSON.
struct SpectrumDocument {
  int schema_version = 1;
  std::string command;  // "free" or "ed"
  ModelParams params;
  CutSpec cut;
  EngineOptions options;
  std::string tool_version;
  double wall_time_s = 0.0;
  EdRunInfo info;  // all-zero for the free engine
  EntanglementSpectrum spectrum;
  std::vector<DegeneracyGroup> groups;
  PhaseSignature signature;
};

nlohmann::json document_to_json(const SpectrumDocument& doc);
SpectrumDocument document_from_json(const nlohmann::json& j);

// Levels table: schema_version,xi,n_up,n_down,weight
std::string document_to_csv(const SpectrumDocument& doc);

// Two columns (total remaining particle number, xi), one row per level.
std::string plot_table(const SpectrumDocument& doc);

// Deterministic sweep document (grid + per-cell results, no timings).
nlohmann::json scan_to_json(const GridSpec& grid, const std::vector<PhaseDiagramCell>& cells);

}  // namespace espec

#endif
