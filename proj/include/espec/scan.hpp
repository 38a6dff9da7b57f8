#ifndef ESPEC_SCAN_HPP
#define ESPEC_SCAN_HPP

#include <string>
#include <vector>

#include "espec/analysis.hpp"
#include "espec/ed.hpp"
#include "espec/freefermion.hpp"
#include "espec/model.hpp"

namespace espec {

enum class EngineKind { Auto, Free, Ed };

std::string to_string(EngineKind kind);
EngineKind engine_from_string(const std::string& name);

struct GridSpec {
  std::vector<double> delta_t_values;
  std::vector<double> u_values;
  int sites = 8;
  int subsystem_sites = 4;
  double t = 1.0;
  EngineKind engine = EngineKind::Auto;
  // grouping tolerances per engine; the ED default covers the measured
  // finite-size splitting of the quadruplets at desk sizes (3e-2 at L = 8)
  // while staying far under the ~0.6 relative gap to the next multiplet
  double free_rel_tol = 1e-8;
  double ed_rel_tol = 0.1;
  FreeEngineOptions free_opts;
  EdOptions ed_opts;
  // on U = 0 cells with L <= 10, also run the ED engine and require
  // agreement within audit_tol
  bool audit_free_cells = false;
  double audit_tol = 1e-9;
};

// One grid point. wall_time_s is performance bookkeeping only and never
// serialized, keeping sweep outputs byte-identical across reruns.
struct PhaseDiagramCell {
  double delta_t = 0.0;
  double u = 0.0;
  bool ok = false;
  std::string error;        // empty on success
  std::string engine_used;  // "free" or "ed"
  PhaseSignature signature{};
  double ground_xi = 0.0;
  double wall_time_s = 0.0;
};

// Runs every grid point (delta_t outer, U inner), distributing cells over
// workers. A failing cell records its error instead of aborting the sweep;
// the output order is always the grid order.
std::vector<PhaseDiagramCell> sweep(const GridSpec& grid);

// CSV with the stable schema
// schema_version,delta_t,U,multiplicity,signature,ground_xi,splitting,engine,error
// (numeric columns empty on error cells; error text has commas/newlines
// replaced so rows stay machine-splittable).
std::string diagram_to_csv(const std::vector<PhaseDiagramCell>& cells);
std::vector<PhaseDiagramCell> parse_diagram_csv(const std::string& csv);

// Multiplicity matrix (rows: U values, columns: delta_t values), plottable
// with gnuplot's `plot '-' matrix with image`; error cells print -1.
std::string multiplicity_matrix(const GridSpec& grid, const std::vector<PhaseDiagramCell>& cells);

// 17-significant-digit decimal form that strtod parses back exactly.
std::string format_double(double value);

}  // namespace espec

#endif
