#include "espec/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "espec/errors.hpp"
#include "espec/util.hpp"

namespace espec {

namespace {

// ascending enumeration of n-bit masks with fixed popcount (Gosper's hack)
std::vector<std::uint32_t> combinations(int width, int count) {
  std::vector<std::uint32_t> out;
  if (count < 0 || count > width) return out;
  if (count == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t mask = (1u << count) - 1u;
  std::uint32_t limit = 1u << width;
  while (mask < limit) {
    out.push_back(mask);
    std::uint32_t c = mask & (~mask + 1u);
    std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::int32_t> rank_table(const std::vector<std::uint32_t>& configs, int width) {
  std::vector<std::int32_t> table(std::size_t{1} << width, -1);
  for (std::size_t r = 0; r < configs.size(); ++r)
    table[configs[r]] = static_cast<std::int32_t>(r);
  return table;
}

// rank of every mask within its popcount class, masks ascending
std::vector<std::int32_t> popcount_class_ranks(int width) {
  std::vector<std::int32_t> table(std::size_t{1} << width);
  std::vector<std::int32_t> counters(static_cast<std::size_t>(width) + 1, 0);
  for (std::uint32_t m = 0; m < (1u << width); ++m)
    table[m] = counters[static_cast<std::size_t>(std::popcount(m))]++;
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * static_cast<std::uint64_t>(n - r + i) / i;
  return result;
}

SectorBasis build_sector_basis(int sites, int n_up, int n_down, std::size_t state_cap) {
  if (sites < 1 || sites > 24)
    throw InvalidParamsError("site count must lie in [1, 24], got " + std::to_string(sites));
  if (n_up < 0 || n_up > sites || n_down < 0 || n_down > sites)
    throw InvalidParamsError("particle numbers must lie in [0, L]");
  std::uint64_t states = binomial(sites, n_up) * binomial(sites, n_down);
  if (states > state_cap)
    throw SectorTooLargeError("sector holds " + std::to_string(states) +
                              " states, above the cap of " + std::to_string(state_cap));

  SectorBasis basis;
  basis.sites = sites;
  basis.n_up = n_up;
  basis.n_down = n_down;
  basis.up_configs = combinations(sites, n_up);
  basis.down_configs = combinations(sites, n_down);
  basis.up_rank = rank_table(basis.up_configs, sites);
  basis.down_rank = rank_table(basis.down_configs, sites);
  return basis;
}

SectorHamiltonian::SectorHamiltonian(const SectorBasis& basis, const ModelParams& params,
                                     BoundaryCondition bc, bool omit_fermion_strings)
    : basis_(&basis), interaction_(params.hubbard_u), omit_strings_(omit_fermion_strings) {
  for (const Bond& bond : chain_bonds(params, bc)) {
    std::uint32_t pair = (1u << bond.a) | (1u << bond.b);
    std::uint32_t below_b = (1u << bond.b) - 1u;
    std::uint32_t upto_a = (1u << (bond.a + 1)) - 1u;
    bonds_.push_back({pair, below_b ^ upto_a, bond.amplitude});
  }
}

void SectorHamiltonian::apply(std::span<const double> in, std::span<double> out) const {
  const SectorBasis& basis = *basis_;
  const std::size_t n_down_configs = basis.down_configs.size();

  parallel_for(basis.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t si = begin; si < end; ++si) {
      const std::uint32_t up = basis.up_configs[si / n_down_configs];
      const std::uint32_t down = basis.down_configs[si % n_down_configs];
      double acc = interaction_ * std::popcount(up & down) * in[si];
      for (const BondMasks& bond : bonds_) {
        // hop of an up particle: exactly one endpoint occupied
        std::uint32_t occ = up & bond.pair;
        if (occ != 0 && occ != bond.pair) {
          double sign =
              (!omit_strings_ && (std::popcount(up & bond.string) & 1)) ? 1.0 : -1.0;
          acc += sign * bond.amplitude * in[basis.index(up ^ bond.pair, down)];
        }
        occ = down & bond.pair;
        if (occ != 0 && occ != bond.pair) {
          double sign =
              (!omit_strings_ && (std::popcount(down & bond.string) & 1)) ? 1.0 : -1.0;
          acc += sign * bond.amplitude * in[basis.index(up, down ^ bond.pair)];
        }
      }
      out[si] = acc;
    }
  });
}

LinearOperator SectorHamiltonian::as_operator() const {
  return [this](std::span<const double> in, std::span<double> out) { this->apply(in, out); };
}

Eigen::MatrixXd SectorHamiltonian::dense() const {
  const std::size_t n = dimension();
  Eigen::MatrixXd h(n, n);
  std::vector<double> unit(n, 0.0), column(n);
  for (std::size_t c = 0; c < n; ++c) {
    unit[c] = 1.0;
    apply(unit, column);
    unit[c] = 0.0;
    for (std::size_t r = 0; r < n; ++r) h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = column[r];
  }
  return h;
}

std::vector<RDMBlock> reduced_density_blocks(std::span<const double> psi,
                                             const SectorBasis& basis, const CutSpec& cut) {
  const int sites = basis.sites;
  const int la = cut.subsystem_sites;
  if (la < 1 || la >= sites) throw InvalidParamsError("cut must leave both subsystems nonempty");
  const int lb = sites - la;
  const std::uint32_t mask_a = (1u << la) - 1u;

  const std::vector<std::int32_t> rank_a = popcount_class_ranks(la);
  const std::vector<std::int32_t> rank_b = popcount_class_ranks(lb);

  // per-config split data, precomputed once per spin species
  struct Split {
    int count_a;
    std::int32_t rank_in_a;
    std::int32_t rank_in_b;
  };
  auto split_configs = [&](const std::vector<std::uint32_t>& configs) {
    std::vector<Split> splits(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      std::uint32_t in_a = configs[i] & mask_a;
      std::uint32_t in_b = configs[i] >> la;
      splits[i] = {std::popcount(in_a), rank_a[in_a], rank_b[in_b]};
    }
    return splits;
  };
  const std::vector<Split> up_splits = split_configs(basis.up_configs);
  const std::vector<Split> down_splits = split_configs(basis.down_configs);

  const int pu_min = std::max(0, basis.n_up - lb), pu_max = std::min(la, basis.n_up);
  const int pd_min = std::max(0, basis.n_down - lb), pd_max = std::min(la, basis.n_down);
  const int pd_span = pd_max - pd_min + 1;

  // rectangular amplitude maps M[key](A config, B config)
  std::vector<Eigen::MatrixXd> maps(static_cast<std::size_t>((pu_max - pu_min + 1) * pd_span));
  for (int pu = pu_min; pu <= pu_max; ++pu)
    for (int pd = pd_min; pd <= pd_max; ++pd) {
      auto rows = binomial(la, pu) * binomial(la, pd);
      auto cols = binomial(lb, basis.n_up - pu) * binomial(lb, basis.n_down - pd);
      maps[static_cast<std::size_t>((pu - pu_min) * pd_span + (pd - pd_min))] =
          Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    }

  const std::size_t n_down_configs = basis.down_configs.size();
  for (std::size_t iu = 0; iu < up_splits.size(); ++iu) {
    const Split& u = up_splits[iu];
    for (std::size_t id = 0; id < down_splits.size(); ++id) {
      const Split& d = down_splits[id];
      Eigen::MatrixXd& m =
          maps[static_cast<std::size_t>((u.count_a - pu_min) * pd_span + (d.count_a - pd_min))];
      const auto down_dim_a = static_cast<Eigen::Index>(binomial(la, d.count_a));
      const auto down_dim_b = static_cast<Eigen::Index>(binomial(lb, basis.n_down - d.count_a));
      const Eigen::Index row = u.rank_in_a * down_dim_a + d.rank_in_a;
      const Eigen::Index col = u.rank_in_b * down_dim_b + d.rank_in_b;
      m(row, col) = psi[iu * n_down_configs + id];
    }
  }

  std::vector<RDMBlock> blocks;
  for (int pu = pu_min; pu <= pu_max; ++pu)
    for (int pd = pd_min; pd <= pd_max; ++pd) {
      Eigen::MatrixXd& m =
          maps[static_cast<std::size_t>((pu - pu_min) * pd_span + (pd - pd_min))];
      Eigen::MatrixXd rho = m * m.transpose();
      Eigen::MatrixXd rho_t = rho.transpose();
      rho = 0.5 * (rho + rho_t);
      blocks.push_back({pu, pd, std::move(rho)});
      m.resize(0, 0);
    }
  return blocks;
}

EntanglementSpectrum block_spectrum(const std::vector<RDMBlock>& blocks, double weight_floor) {
  EntanglementSpectrum spectrum;
  spectrum.complete = true;
  for (const RDMBlock& block : blocks) {
    if (block.matrix.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("RDM block eigensolver failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      double lambda = solver.eigenvalues()(i);
      if (lambda < -1e-10)
        throw NegativeEigenvalueError("RDM eigenvalue " + std::to_string(lambda) +
                                      " below -1e-10");
      if (lambda < weight_floor) {
        ++spectrum.truncated_levels;
        continue;
      }
      lambda = std::min(lambda, 1.0);
      spectrum.levels.push_back({-std::log(lambda), block.n_up_a, block.n_down_a, lambda});
    }
  }
  sort_levels(spectrum.levels);
  return spectrum;
}

EntanglementSpectrum ed_entanglement_spectrum(const ModelParams& params, const CutSpec& cut,
                                              const EdOptions& opts, EdRunInfo* info) {
  validate_params(params);
  validate_cut(params, cut);
  const int half = params.sites / 2;
  SectorBasis basis = build_sector_basis(params.sites, half, half, opts.sector_cap);
  SectorHamiltonian hamiltonian(basis, params, BoundaryCondition::PBC);
  GroundStateResult ground =
      lanczos_lowest(hamiltonian.as_operator(), basis.size(), 2, opts.lanczos);
  if (ground.gap < opts.gap_tol)
    throw DegenerateGroundStateError("sector gap " + std::to_string(ground.gap) +
                                     " below " + std::to_string(opts.gap_tol) +
                                     "; entanglement spectrum of the ground state is ambiguous");

  if (opts.audit_sectors) {
    for (int shift : {+1, -1}) {
      SectorBasis other =
          build_sector_basis(params.sites, half + shift, half - shift, opts.sector_cap);
      SectorHamiltonian h_other(other, params, BoundaryCondition::PBC);
      GroundStateResult r = lanczos_lowest(h_other.as_operator(), other.size(), 1, opts.lanczos);
      if (r.energies[0] < ground.energies[0] - 1e-10)
        throw std::runtime_error(
            "sector audit: lower energy " + std::to_string(r.energies[0]) + " found in sector (" +
            std::to_string(half + shift) + ", " + std::to_string(half - shift) + ")");
    }
  }

  std::vector<RDMBlock> blocks = reduced_density_blocks(ground.ground_vector, basis, cut);
  EntanglementSpectrum spectrum = block_spectrum(blocks, opts.rdm_floor);
  if (info) {
    info->energies = ground.energies;
    info->residual = ground.residual;
    info->gap = ground.gap;
    info->iterations = ground.iterations;
    info->seed = ground.seed;
    info->truncated_levels = spectrum.truncated_levels;
  }
  return spectrum;
}

}  // namespace espec
