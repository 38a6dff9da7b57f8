#ifndef ESPEC_REFERENCE_HPP
#define ESPEC_REFERENCE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "espec/model.hpp"
#include "espec/spectrum.hpp"

namespace espec::reference {

// Slow, self-contained many-body implementation used as an independent
// check on the production engines. It deliberately uses a different
// convention: fermion modes are interleaved site-major (mode 2i = site i
// spin up, mode 2i+1 = spin down) and every operator application walks the
// full Jordan-Wigner string, so none of the production shortcuts (species-
// major ordering, between-site masks, block factorization signs) are
// shared. Feasible up to a few hundred sector states.

struct SectorProblem {
  std::vector<std::uint32_t> states;  // interleaved 2L-bit masks, ascending
  Eigen::MatrixXd hamiltonian;
};

SectorProblem sector_problem(const ModelParams& params, BoundaryCondition bc, int n_up,
                             int n_down);

struct GroundData {
  double e0 = 0.0;
  double e1 = 0.0;
  EntanglementSpectrum spectrum;  // complete ES of the ground state, labels included
};

// Dense diagonalization plus a direct partial trace over the interleaved
// Fock space. weight_floor drops eigenvalues below it (to mirror the
// production floor); pass 0 to keep everything nonnegative.
GroundData ground_entanglement(const ModelParams& params, BoundaryCondition bc, int n_up,
                               int n_down, const CutSpec& cut, double weight_floor = 1e-14);

// All entanglement levels from mode occupations by explicit enumeration of
// every 2^m pattern; m is capped at 20. Labels: n_up = particle count.
std::vector<ESLevel> enumerate_all_patterns(const std::vector<double>& modes);

}  // namespace espec::reference

#endif
