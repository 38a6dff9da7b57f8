#include "espec/scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "espec/errors.hpp"
#include "espec/util.hpp"

namespace espec {

std::string to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::Auto: return "auto";
    case EngineKind::Free: return "free";
    case EngineKind::Ed: return "ed";
  }
  return "auto";
}

EngineKind engine_from_string(const std::string& name) {
  if (name == "auto") return EngineKind::Auto;
  if (name == "free") return EngineKind::Free;
  if (name == "ed") return EngineKind::Ed;
  throw InvalidParamsError("unknown engine '" + name + "' (expected auto, free or ed)");
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

PhaseDiagramCell run_cell(const GridSpec& grid, double delta_t, double u) {
  PhaseDiagramCell cell;
  cell.delta_t = delta_t;
  cell.u = u;
  const auto start = std::chrono::steady_clock::now();
  try {
    ModelParams params{grid.sites, grid.t, delta_t, u};
    CutSpec cut{grid.subsystem_sites};
    EngineKind choice = grid.engine;
    if (choice == EngineKind::Auto) choice = u == 0.0 ? EngineKind::Free : EngineKind::Ed;
    if (choice == EngineKind::Free && u != 0.0)
      throw EngineMismatchError("free engine selected on a U != 0 grid point");

    EntanglementSpectrum spectrum;
    double rel_tol = 0.0;
    if (choice == EngineKind::Free) {
      spectrum = free_entanglement_spectrum(params, cut, grid.free_opts);
      rel_tol = grid.free_rel_tol;
      cell.engine_used = "free";
      if (grid.audit_free_cells && grid.sites <= 10) {
        EntanglementSpectrum ed = ed_entanglement_spectrum(params, cut, grid.ed_opts);
        double mismatch = spectra_weight_mismatch(spectrum, ed, 1e-12);
        if (mismatch > grid.audit_tol)
          throw std::runtime_error("audit: engines disagree by " + format_double(mismatch));
      }
    } else {
      spectrum = ed_entanglement_spectrum(params, cut, grid.ed_opts);
      rel_tol = grid.ed_rel_tol;
      cell.engine_used = "ed";
    }

    auto groups = group_levels(spectrum, rel_tol);
    cell.signature = classify(groups);
    cell.ground_xi = groups.front().xi_rep;
    cell.ok = true;
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.error = e.what();
  }
  cell.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

std::string sanitize(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return text;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

std::vector<PhaseDiagramCell> sweep(const GridSpec& grid) {
  if (grid.delta_t_values.empty() || grid.u_values.empty())
    throw InvalidParamsError("grid axes must be nonempty");
  if (grid.engine == EngineKind::Free)
    for (double u : grid.u_values)
      if (u != 0.0) throw InvalidParamsError("free engine grid must have U = 0 everywhere");
  validate_params(ModelParams{grid.sites, grid.t, grid.delta_t_values.front(),
                              grid.u_values.front()});
  validate_cut(ModelParams{grid.sites, grid.t, 0.0, 0.0}, CutSpec{grid.subsystem_sites});

  const std::size_t nu = grid.u_values.size();
  const std::size_t total = grid.delta_t_values.size() * nu;
  std::vector<PhaseDiagramCell> cells(total);

  // cells are independent; workers pull the next undone index
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= total) break;
      cells[i] = run_cell(grid, grid.delta_t_values[i / nu], grid.u_values[i % nu]);
    }
  };
  int workers = worker_count();
  if (workers <= 1 || total <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return cells;
}

std::string diagram_to_csv(const std::vector<PhaseDiagramCell>& cells) {
  std::ostringstream out;
  out << "schema_version,delta_t,U,multiplicity,signature,ground_xi,splitting,engine,error\n";
  for (const PhaseDiagramCell& cell : cells) {
    out << "1," << format_double(cell.delta_t) << ',' << format_double(cell.u) << ',';
    if (cell.ok) {
      out << cell.signature.ground_multiplicity << ',' << signature_label(cell.signature) << ','
          << format_double(cell.ground_xi) << ',' << format_double(cell.signature.splitting)
          << ',' << cell.engine_used << ",\n";
    } else {
      out << ",,,," << cell.engine_used << ',' << sanitize(cell.error) << '\n';
    }
  }
  return out.str();
}

std::vector<PhaseDiagramCell> parse_diagram_csv(const std::string& csv) {
  std::vector<PhaseDiagramCell> cells;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_csv_row(line);
    if (fields.size() != 9) throw std::runtime_error("malformed diagram CSV row: " + line);
    PhaseDiagramCell cell;
    cell.delta_t = std::strtod(fields[1].c_str(), nullptr);
    cell.u = std::strtod(fields[2].c_str(), nullptr);
    cell.engine_used = fields[7];
    cell.error = fields[8];
    cell.ok = cell.error.empty();
    if (cell.ok) {
      cell.signature.ground_multiplicity = std::stoi(fields[3]);
      cell.ground_xi = std::strtod(fields[5].c_str(), nullptr);
      cell.signature.splitting = std::strtod(fields[6].c_str(), nullptr);
      const std::string& label = fields[4];
      if (label == "NonDegenerate") cell.signature.tag = PhaseTag::NonDegenerate;
      else if (label == "Sixteenfold") cell.signature.tag = PhaseTag::Sixteenfold;
      else if (label == "FourfoldDiagonal") cell.signature.tag = PhaseTag::FourfoldDiagonal;
      else if (label == "FourfoldAntidiagonal") cell.signature.tag = PhaseTag::FourfoldAntidiagonal;
      else cell.signature.tag = PhaseTag::Other;
    }
    cells.push_back(cell);
  }
  return cells;
}

std::string multiplicity_matrix(const GridSpec& grid, const std::vector<PhaseDiagramCell>& cells) {
  std::ostringstream out;
  out << "# multiplicity matrix: rows U";
  for (double u : grid.u_values) out << ' ' << format_double(u);
  out << "; columns delta_t";
  for (double dt : grid.delta_t_values) out << ' ' << format_double(dt);
  out << "; -1 marks a failed cell\n";
  const std::size_t nu = grid.u_values.size();
  for (std::size_t iu = 0; iu < nu; ++iu) {
    for (std::size_t it = 0; it < grid.delta_t_values.size(); ++it) {
      const PhaseDiagramCell& cell = cells[it * nu + iu];
      if (it > 0) out << ' ';
      out << (cell.ok ? cell.signature.ground_multiplicity : -1);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace espec
