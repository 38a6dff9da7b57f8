#include "espec/reference.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "espec/errors.hpp"

namespace espec::reference {

namespace {

// c_mode acting on |mask>: returns false when annihilated; otherwise flips
// the bit and accumulates the Jordan-Wigner parity of all lower modes.
bool apply_annihilate(std::uint32_t& mask, int mode, int& sign) {
  if (!(mask >> mode & 1u)) return false;
  if (std::popcount(mask & ((1u << mode) - 1u)) & 1) sign = -sign;
  mask ^= 1u << mode;
  return true;
}

bool apply_create(std::uint32_t& mask, int mode, int& sign) {
  if (mask >> mode & 1u) return false;
  if (std::popcount(mask & ((1u << mode) - 1u)) & 1) sign = -sign;
  mask ^= 1u << mode;
  return true;
}

constexpr std::uint32_t kUpModes = 0x55555555u;  // even mode indices

}  // namespace

SectorProblem sector_problem(const ModelParams& params, BoundaryCondition bc, int n_up,
                             int n_down) {
  const int sites = params.sites;
  if (2 * sites > 26) throw InvalidParamsError("reference implementation is limited to 2L <= 26");

  SectorProblem problem;
  const std::uint32_t fock = 1u << (2 * sites);
  for (std::uint32_t mask = 0; mask < fock; ++mask) {
    if (std::popcount(mask & kUpModes) == n_up && std::popcount(mask & ~kUpModes & (fock - 1u)) == n_down)
      problem.states.push_back(mask);
  }
  std::map<std::uint32_t, int> position;
  for (std::size_t i = 0; i < problem.states.size(); ++i)
    position[problem.states[i]] = static_cast<int>(i);

  const auto n = static_cast<Eigen::Index>(problem.states.size());
  problem.hamiltonian = Eigen::MatrixXd::Zero(n, n);

  const std::vector<Bond> bonds = chain_bonds(params, bc);
  for (Eigen::Index col = 0; col < n; ++col) {
    const std::uint32_t source = problem.states[static_cast<std::size_t>(col)];
    // interaction: count doubly occupied sites
    int doubles = 0;
    for (int site = 0; site < sites; ++site)
      if ((source >> (2 * site) & 1u) && (source >> (2 * site + 1) & 1u)) ++doubles;
    problem.hamiltonian(col, col) += params.hubbard_u * doubles;

    for (const Bond& bond : bonds)
      for (int spin = 0; spin < 2; ++spin)
        for (auto [from, to] : {std::pair{bond.a, bond.b}, std::pair{bond.b, bond.a}}) {
          std::uint32_t mask = source;
          int sign = 1;
          if (!apply_annihilate(mask, 2 * from + spin, sign)) continue;
          if (!apply_create(mask, 2 * to + spin, sign)) continue;
          problem.hamiltonian(position.at(mask), col) += -bond.amplitude * sign;
        }
  }
  return problem;
}

GroundData ground_entanglement(const ModelParams& params, BoundaryCondition bc, int n_up,
                               int n_down, const CutSpec& cut, double weight_floor) {
  SectorProblem problem = sector_problem(params, bc, n_up, n_down);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(problem.hamiltonian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("reference eigensolver failed");

  GroundData data;
  data.e0 = solver.eigenvalues()(0);
  data.e1 = solver.eigenvalues().size() > 1 ? solver.eigenvalues()(1) : data.e0;

  // Partial trace. A-modes are the 2 L_A lowest interleaved modes, so a
  // basis state splits as |a> (x) |b> with no reordering sign.
  const int a_modes = 2 * cut.subsystem_sites;
  const std::uint32_t a_mask = (1u << a_modes) - 1u;
  std::map<std::uint32_t, std::map<std::uint32_t, double>> amplitude;  // a -> b -> psi
  for (std::size_t i = 0; i < problem.states.size(); ++i) {
    const std::uint32_t state = problem.states[i];
    amplitude[state & a_mask][state >> a_modes] = solver.eigenvectors()(static_cast<Eigen::Index>(i), 0);
  }

  // group A configurations by particle content, then diagonalize each label
  // block of rho_A
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> a_by_label;
  for (const auto& [a, row] : amplitude) {
    int a_up = std::popcount(a & kUpModes);
    int a_down = std::popcount(a) - a_up;
    a_by_label[{a_up, a_down}].push_back(a);
  }

  for (const auto& [label, a_configs] : a_by_label) {
    // collect the union of B configurations reached from this label
    std::map<std::uint32_t, int> b_index;
    for (std::uint32_t a : a_configs)
      for (const auto& [b, value] : amplitude.at(a))
        b_index.emplace(b, static_cast<int>(b_index.size()));

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a_configs.size()),
                                              static_cast<Eigen::Index>(b_index.size()));
    for (std::size_t r = 0; r < a_configs.size(); ++r)
      for (const auto& [b, value] : amplitude.at(a_configs[r]))
        m(static_cast<Eigen::Index>(r), b_index.at(b)) = value;

    Eigen::MatrixXd rho = m * m.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> block(rho, Eigen::EigenvaluesOnly);
    if (block.info() != Eigen::Success)
      throw std::runtime_error("reference RDM eigensolver failed");
    for (Eigen::Index i = 0; i < block.eigenvalues().size(); ++i) {
      double lambda = block.eigenvalues()(i);
      if (lambda < weight_floor) continue;
      lambda = std::min(lambda, 1.0);
      data.spectrum.levels.push_back({-std::log(lambda), label.first, label.second, lambda});
    }
  }
  data.spectrum.complete = true;
  sort_levels(data.spectrum.levels);
  return data;
}

std::vector<ESLevel> enumerate_all_patterns(const std::vector<double>& modes) {
  const int m = static_cast<int>(modes.size());
  if (m > 20) throw InvalidParamsError("pattern enumeration capped at 20 modes");
  std::vector<ESLevel> levels;
  for (std::uint32_t pattern = 0; pattern < (1u << m); ++pattern) {
    double xi = 0.0;
    int particles = 0;
    for (int l = 0; l < m; ++l) {
      if (pattern >> l & 1u) {
        xi -= std::log(modes[static_cast<std::size_t>(l)]);
        ++particles;
      } else {
        xi -= std::log(1.0 - modes[static_cast<std::size_t>(l)]);
      }
    }
    levels.push_back({xi, particles, 0, std::exp(-xi)});
  }
  sort_levels(levels);
  return levels;
}

}  // namespace espec::reference
