#include "espec/serialize.hpp"

#include <sstream>

namespace espec {

namespace {

using nlohmann::json;

json level_to_json(const ESLevel& level) {
  return json{{"xi", level.xi}, {"n_up", level.n_up}, {"n_down", level.n_down},
              {"weight", level.weight}};
}

ESLevel level_from_json(const json& j) {
  return {j.at("xi").get<double>(), j.at("n_up").get<int>(), j.at("n_down").get<int>(),
          j.at("weight").get<double>()};
}

PhaseTag tag_from_string(const std::string& name) {
  if (name == "NonDegenerate") return PhaseTag::NonDegenerate;
  if (name == "Sixteenfold") return PhaseTag::Sixteenfold;
  if (name == "FourfoldDiagonal") return PhaseTag::FourfoldDiagonal;
  if (name == "FourfoldAntidiagonal") return PhaseTag::FourfoldAntidiagonal;
  return PhaseTag::Other;
}

}  // namespace

json document_to_json(const SpectrumDocument& doc) {
  json levels = json::array();
  for (const ESLevel& level : doc.spectrum.levels) levels.push_back(level_to_json(level));

  json groups = json::array();
  for (const DegeneracyGroup& group : doc.groups) {
    json members = json::array();
    for (const ESLevel& level : group.members) members.push_back(level_to_json(level));
    groups.push_back(json{{"xi_rep", group.xi_rep},
                          {"multiplicity", group.multiplicity},
                          {"members", members}});
  }

  return json{
      {"schema_version", doc.schema_version},
      {"metadata",
       json{{"command", doc.command},
            {"boundary", "PBC"},
            {"params",
             json{{"L", doc.params.sites},
                  {"t", doc.params.t},
                  {"delta_t", doc.params.delta_t},
                  {"U", doc.params.hubbard_u}}},
            {"cut", json{{"L_A", doc.cut.subsystem_sites}}},
            {"options",
             json{{"max_levels", doc.options.max_levels},
                  {"xi_window", doc.options.xi_window},
                  {"group_rel_tol_free", doc.options.group_rel_tol_free},
                  {"group_rel_tol_ed", doc.options.group_rel_tol_ed},
                  {"seed", doc.options.lanczos.seed},
                  {"lanczos_tol", doc.options.lanczos.tol},
                  {"lanczos_max_iter", doc.options.lanczos.max_iter},
                  {"eigenpairs", doc.options.eigenpairs},
                  {"sector_cap", doc.options.sector_cap},
                  {"rdm_floor", doc.options.rdm_floor},
                  {"gap_tol", doc.options.gap_tol},
                  {"audit_sectors", doc.options.audit_sectors}}},
            {"tool_version", doc.tool_version},
            {"wall_time_s", doc.wall_time_s},
            {"result_info",
             json{{"energies", doc.info.energies},
                  {"residual", doc.info.residual},
                  {"gap", doc.info.gap},
                  {"iterations", doc.info.iterations},
                  {"seed", doc.info.seed},
                  {"truncated_levels", doc.info.truncated_levels}}}}},
      {"complete", doc.spectrum.complete},
      {"levels", levels},
      {"groups", groups},
      {"signature",
       json{{"tag", to_string(doc.signature.tag)},
            {"label", signature_label(doc.signature)},
            {"ground_multiplicity", doc.signature.ground_multiplicity},
            {"splitting", doc.signature.splitting}}}};
}

SpectrumDocument document_from_json(const json& j) {
  SpectrumDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  const json& meta = j.at("metadata");
  doc.command = meta.at("command").get<std::string>();
  const json& params = meta.at("params");
  doc.params = {params.at("L").get<int>(), params.at("t").get<double>(),
                params.at("delta_t").get<double>(), params.at("U").get<double>()};
  doc.cut = {meta.at("cut").at("L_A").get<int>()};
  const json& options = meta.at("options");
  doc.options.max_levels = options.at("max_levels").get<int>();
  doc.options.xi_window = options.at("xi_window").get<double>();
  doc.options.group_rel_tol_free = options.at("group_rel_tol_free").get<double>();
  doc.options.group_rel_tol_ed = options.at("group_rel_tol_ed").get<double>();
  doc.options.lanczos.seed = options.at("seed").get<std::uint64_t>();
  doc.options.lanczos.tol = options.at("lanczos_tol").get<double>();
  doc.options.lanczos.max_iter = options.at("lanczos_max_iter").get<int>();
  doc.options.eigenpairs = options.at("eigenpairs").get<int>();
  doc.options.sector_cap = options.at("sector_cap").get<std::size_t>();
  doc.options.rdm_floor = options.at("rdm_floor").get<double>();
  doc.options.gap_tol = options.at("gap_tol").get<double>();
  doc.options.audit_sectors = options.at("audit_sectors").get<bool>();
  doc.tool_version = meta.at("tool_version").get<std::string>();
  doc.wall_time_s = meta.at("wall_time_s").get<double>();
  const json& info = meta.at("result_info");
  doc.info.energies = info.at("energies").get<std::vector<double>>();
  doc.info.residual = info.at("residual").get<double>();
  doc.info.gap = info.at("gap").get<double>();
  doc.info.iterations = info.at("iterations").get<int>();
  doc.info.seed = info.at("seed").get<std::uint64_t>();
  doc.info.truncated_levels = info.at("truncated_levels").get<int>();

  doc.spectrum.complete = j.at("complete").get<bool>();
  doc.spectrum.truncated_levels = doc.info.truncated_levels;
  for (const json& level : j.at("levels")) doc.spectrum.levels.push_back(level_from_json(level));
  for (const json& group : j.at("groups")) {
    DegeneracyGroup g;
    g.xi_rep = group.at("xi_rep").get<double>();
    g.multiplicity = group.at("multiplicity").get<int>();
    for (const json& member : group.at("members")) g.members.push_back(level_from_json(member));
    doc.groups.push_back(std::move(g));
  }
  const json& signature = j.at("signature");
  doc.signature.tag = tag_from_string(signature.at("tag").get<std::string>());
  doc.signature.ground_multiplicity = signature.at("ground_multiplicity").get<int>();
  doc.signature.splitting = signature.at("splitting").get<double>();
  return doc;
}

std::string document_to_csv(const SpectrumDocument& doc) {
  std::ostringstream out;
  out << "schema_version,xi,n_up,n_down,weight\n";
  for (const ESLevel& level : doc.spectrum.levels)
    out << doc.schema_version << ',' << format_double(level.xi) << ',' << level.n_up << ','
        << level.n_down << ',' << format_double(level.weight) << '\n';
  return out.str();
}

std::string plot_table(const SpectrumDocument& doc) {
  std::ostringstream out;
  out << "# n_total xi\n";
  for (const ESLevel& level : doc.spectrum.levels)
    out << level.n_up + level.n_down << ' ' << format_double(level.xi) << '\n';
  return out.str();
}

json scan_to_json(const GridSpec& grid, const std::vector<PhaseDiagramCell>& cells) {
  json cell_array = json::array();
  for (const PhaseDiagramCell& cell : cells) {
    json c{{"delta_t", cell.delta_t}, {"U", cell.u}, {"ok", cell.ok},
           {"engine", cell.engine_used}, {"error", cell.error}};
    if (cell.ok) {
      c["multiplicity"] = cell.signature.ground_multiplicity;
      c["signature"] = signature_label(cell.signature);
      c["ground_xi"] = cell.ground_xi;
      c["splitting"] = cell.signature.splitting;
    }
    cell_array.push_back(std::move(c));
  }
  return json{{"schema_version", 1},
              {"grid",
               json{{"delta_t_values", grid.delta_t_values},
                    {"U_values", grid.u_values},
                    {"L", grid.sites},
                    {"L_A", grid.subsystem_sites},
                    {"t", grid.t},
                    {"engine", to_string(grid.engine)},
                    {"group_rel_tol_free", grid.free_rel_tol},
                    {"group_rel_tol_ed", grid.ed_rel_tol},
                    {"seed", grid.ed_opts.lanczos.seed}}},
              {"cells", cell_array}};
}

}  // namespace espec
