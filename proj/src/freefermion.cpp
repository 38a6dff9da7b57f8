#include "espec/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>

#include "espec/errors.hpp"

namespace espec {

namespace {

constexpr double kFreezeTol = 1e-12;   // modes this close to 0/1 are never flipped
constexpr double kGapTol = 1e-9;       // minimum single-particle gap at the Fermi level
constexpr double kRangeTol = 1e-12;    // allowed eigenvalue excursion outside [0, 1]

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd& m,
                                                               bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  return solver;
}

}  // namespace

Eigen::MatrixXd ground_correlation_matrix(const Eigen::MatrixXd& hopping, int fill_count) {
  const int dim = static_cast<int>(hopping.rows());
  if (fill_count < 0 || fill_count > dim)
    throw InvalidParamsError("fill count must lie in [0, dim], got " + std::to_string(fill_count));

  auto solver = solve_symmetric(hopping, true);
  if (fill_count > 0 && fill_count < dim) {
    double gap = solver.eigenvalues()(fill_count) - solver.eigenvalues()(fill_count - 1);
    if (gap < kGapTol)
      throw GaplessError("single-particle gap " + std::to_string(gap) +
                         " at the Fermi level; ground state ill-defined");
  }

  Eigen::MatrixXd occupied = solver.eigenvectors().leftCols(fill_count);
  Eigen::MatrixXd g = occupied * occupied.transpose();
  // exact symmetry regardless of how the product was blocked
  Eigen::MatrixXd gt = g.transpose();
  g = 0.5 * (g + gt);
  return g;
}

Eigen::MatrixXd subsystem_block(const Eigen::MatrixXd& correlation, const CutSpec& cut) {
  const int la = cut.subsystem_sites;
  if (la < 1 || la > correlation.rows())
    throw InvalidParamsError("subsystem size " + std::to_string(la) + " exceeds system");
  return correlation.topLeftCorner(la, la);
}

std::vector<double> mode_spectrum(const Eigen::MatrixXd& subsystem_correlation) {
  auto solver = solve_symmetric(subsystem_correlation, false);
  std::vector<double> modes(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& f : modes) {
    if (f < -kRangeTol || f > 1.0 + kRangeTol)
      throw SpectrumOutOfRangeError("correlation eigenvalue " + std::to_string(f) +
                                    " outside [0, 1]");
    f = std::clamp(f, 0.0, 1.0);
  }
  std::sort(modes.begin(), modes.end());
  return modes;
}

EntanglementSpectrum enumerate_levels(const std::vector<double>& modes, int max_levels,
                                      double xi_window) {
  if (max_levels < 1) max_levels = 1;

  // Base pattern: occupy f > 1/2 (a tie at 1/2 stays empty; flipping it is
  // free anyway). Frozen modes keep their exact -ln contribution in xi0.
  double xi0 = 0.0;
  int n_base = 0;
  struct Flip {
    double cost;
    int delta;  // particle-count change when this mode is flipped
  };
  std::vector<Flip> flips;
  for (double f : modes) {
    const bool occupied = f > 0.5;
    xi0 -= std::log(occupied ? f : 1.0 - f);
    if (occupied) ++n_base;
    if (f > kFreezeTol && f < 1.0 - kFreezeTol)
      flips.push_back({std::abs(std::log(f) - std::log(1.0 - f)), occupied ? -1 : +1});
  }
  std::stable_sort(flips.begin(), flips.end(),
                   [](const Flip& a, const Flip& b) { return a.cost < b.cost; });
  const std::size_t m = flips.size();

  EntanglementSpectrum result;
  auto emit = [&](double extra, int delta_n) {
    double xi = xi0 + extra;
    result.levels.push_back({xi, n_base + delta_n, 0, std::exp(-xi)});
  };

  // Best-first walk over subset sums of the sorted flip costs. Each
  // non-empty subset is reached exactly once: from its parent by either
  // appending the next index or replacing its largest index by the next.
  struct Node {
    double sum;
    std::size_t last;
    int delta;
  };
  auto heavier = [](const Node& a, const Node& b) { return a.sum > b.sum; };
  std::priority_queue<Node, std::vector<Node>, decltype(heavier)> frontier(heavier);

  emit(0.0, 0);
  if (m > 0) frontier.push({flips[0].cost, 0, flips[0].delta});

  bool truncated = false;
  while (!frontier.empty()) {
    if (static_cast<int>(result.levels.size()) >= max_levels) {
      truncated = true;
      break;
    }
    Node node = frontier.top();
    if (node.sum > xi_window) {
      truncated = true;
      break;
    }
    frontier.pop();
    emit(node.sum, node.delta);
    if (node.last + 1 < m) {
      const Flip& next = flips[node.last + 1];
      frontier.push({node.sum + next.cost, node.last + 1, node.delta + next.delta});
      frontier.push({node.sum - flips[node.last].cost + next.cost, node.last + 1,
                     node.delta - flips[node.last].delta + next.delta});
    }
  }
  result.complete = !truncated && frontier.empty();
  sort_levels(result.levels);
  return result;
}

EntanglementSpectrum combine_spins(const EntanglementSpectrum& up, const EntanglementSpectrum& down,
                                   int max_levels) {
  EntanglementSpectrum result;
  if (up.levels.empty() || down.levels.empty()) {
    result.complete = up.complete && down.complete;
    return result;
  }
  if (max_levels < 1) max_levels = 1;

  // Best-first merge over the (i, j) pair lattice; (i+1, j) is pushed only
  // from column 0 so every pair enters the frontier exactly once.
  struct Node {
    double sum;
    std::size_t i, j;
  };
  auto heavier = [](const Node& a, const Node& b) { return a.sum > b.sum; };
  std::priority_queue<Node, std::vector<Node>, decltype(heavier)> frontier(heavier);
  frontier.push({up.levels[0].xi + down.levels[0].xi, 0, 0});

  bool truncated = false;
  while (!frontier.empty()) {
    if (static_cast<int>(result.levels.size()) >= max_levels) {
      truncated = true;
      break;
    }
    Node node = frontier.top();
    frontier.pop();
    const ESLevel& a = up.levels[node.i];
    const ESLevel& b = down.levels[node.j];
    result.levels.push_back(
        {node.sum, a.n_up + a.n_down, b.n_up + b.n_down, std::exp(-node.sum)});
    if (node.j == 0 && node.i + 1 < up.levels.size())
      frontier.push({up.levels[node.i + 1].xi + b.xi, node.i + 1, 0});
    if (node.j + 1 < down.levels.size())
      frontier.push({a.xi + down.levels[node.j + 1].xi, node.i, node.j + 1});
  }
  result.complete = up.complete && down.complete && !truncated && frontier.empty();
  result.truncated_levels = up.truncated_levels + down.truncated_levels;
  sort_levels(result.levels);
  return result;
}

EntanglementSpectrum free_entanglement_spectrum(const ModelParams& params, const CutSpec& cut,
                                                const FreeEngineOptions& opts) {
  validate_params(params);
  validate_cut(params, cut);
  if (params.hubbard_u != 0.0)
    throw EngineMismatchError("free-fermion engine requires U = 0, got U = " +
                              std::to_string(params.hubbard_u));

  Eigen::MatrixXd hopping = build_hopping_matrix(params, BoundaryCondition::PBC);
  Eigen::MatrixXd g = ground_correlation_matrix(hopping, params.sites / 2);
  std::vector<double> modes = mode_spectrum(subsystem_block(g, cut));
  EntanglementSpectrum per_spin = enumerate_levels(modes, opts.max_levels, opts.xi_window);
  return combine_spins(per_spin, per_spin, opts.max_levels);
}

}  // namespace espec
