#ifndef ESPEC_ED_HPP
#define ESPEC_ED_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "espec/lanczos.hpp"
#include "espec/model.hpp"
#include "espec/spectrum.hpp"

namespace espec {

// Occupation basis of a fixed (N_up, N_down) sector. Site i maps to bit i.
// States are ordered lexicographically: up mask ascending, then down mask
// ascending, so index(up, down) = rank(up) * |down configs| + rank(down).
struct SectorBasis {
  int sites = 0;
  int n_up = 0;
  int n_down = 0;
  std::vector<std::uint32_t> up_configs;    // ascending masks with popcount n_up
  std::vector<std::uint32_t> down_configs;  // ascending masks with popcount n_down
  std::vector<std::int32_t> up_rank;        // mask -> rank, size 2^sites
  std::vector<std::int32_t> down_rank;

  std::size_t size() const { return up_configs.size() * down_configs.size(); }
  std::size_t index(std::uint32_t up, std::uint32_t down) const {
    return static_cast<std::size_t>(up_rank[up]) * down_configs.size() +
           static_cast<std::size_t>(down_rank[down]);
  }
  std::pair<std::uint32_t, std::uint32_t> state(std::size_t idx) const {
    return {up_configs[idx / down_configs.size()], down_configs[idx % down_configs.size()]};
  }
};

std::uint64_t binomial(int n, int r);

// Complete, duplicate-free sector basis. Throws SectorTooLargeError when
// the state count exceeds state_cap.
SectorBasis build_sector_basis(int sites, int n_up, int n_down,
                               std::size_t state_cap = 4'000'000);

// Matrix-free SSHH Hamiltonian on a sector: diagonal U * (number of doubly
// occupied sites) plus hopping -amplitude per bond and spin with the
// fermionic string sign (-1)^(occupied same-spin sites strictly between the
// bond endpoints). `omit_fermion_strings` drops the string signs; it exists
// only so the validation suite can prove the sign checks have teeth.
class SectorHamiltonian {
 public:
  SectorHamiltonian(const SectorBasis& basis, const ModelParams& params, BoundaryCondition bc,
                    bool omit_fermion_strings = false);

  std::size_t dimension() const { return basis_->size(); }

  // out = H * in, gather form: every output element is produced by exactly
  // one worker, so results are identical for any worker count.
  void apply(std::span<const double> in, std::span<double> out) const;

  LinearOperator as_operator() const;

  // Dense matrix assembled column by column through apply(); for small
  // sectors and tests.
  Eigen::MatrixXd dense() const;

 private:
  const SectorBasis* basis_;
  double interaction_;
  bool omit_strings_;
  struct BondMasks {
    std::uint32_t pair;    // endpoints
    std::uint32_t string;  // sites strictly between the endpoints
    double amplitude;      // hop matrix element is -amplitude
  };
  std::vector<BondMasks> bonds_;
};

// One particle-number block of the subsystem reduced density matrix.
struct RDMBlock {
  int n_up_a = 0;
  int n_down_a = 0;
  Eigen::MatrixXd matrix;  // symmetric PSD, dim C(L_A,n_up_a)*C(L_A,n_down_a)
};

// Particle-number blocks of rho_A = Tr_B |psi><psi| for A = sites 1..L_A.
// With all up-spin operators ordered before all down-spin operators the A/B
// factorization sign is (-1)^(N_upB * N_downA), constant inside each block,
// so it cancels in M M^T and is omitted. Blocks come out key-ordered
// (n_up_a, then n_down_a, ascending).
std::vector<RDMBlock> reduced_density_blocks(std::span<const double> psi,
                                             const SectorBasis& basis, const CutSpec& cut);

// Eigenvalues >= weight_floor of every block become levels xi = -ln(lambda)
// carrying the block's particle labels. Eigenvalues below -1e-10 raise
// NegativeEigenvalueError; the count dropped below the floor is recorded in
// truncated_levels.
EntanglementSpectrum block_spectrum(const std::vector<RDMBlock>& blocks,
                                    double weight_floor = 1e-14);

struct EdOptions {
  LanczosOptions lanczos;
  std::size_t sector_cap = 4'000'000;
  double rdm_floor = 1e-14;
  double gap_tol = 1e-8;       // below this E1 - E0 the ground state counts as degenerate
  bool audit_sectors = false;  // also check sectors (L/2 +- 1, L/2 -+ 1) for lower energy
};

struct EdRunInfo {
  std::vector<double> energies;
  double residual = 0.0;
  double gap = 0.0;
  int iterations = 0;
  std::uint64_t seed = 0;
  int truncated_levels = 0;
};

// Full interacting pipeline at half filling with PBC: sector basis ->
// Lanczos (k = 2) -> gap check -> RDM blocks -> block spectra.
EntanglementSpectrum ed_entanglement_spectrum(const ModelParams& params, const CutSpec& cut,
                                              const EdOptions& opts = {},
                                              EdRunInfo* info = nullptr);

}  // namespace espec

#endif
