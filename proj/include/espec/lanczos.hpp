#ifndef ESPEC_LANCZOS_HPP
#define ESPEC_LANCZOS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace espec {

// y = A x for a real symmetric operator.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct LanczosOptions {
  int max_iter = 500;
  double tol = 1e-10;      // residual bound ||A v - E v||
  std::uint64_t seed = 1;  // start-vector seed; fixed seed => bitwise-identical run
};

struct GroundStateResult {
  std::vector<double> energies;       // k lowest, ascending
  std::vector<double> ground_vector;  // unit eigenvector for energies[0]
  double residual = 0.0;              // max ||A v - E v|| over the k pairs
  double gap = 0.0;                   // energies[1] - energies[0] when k >= 2
  int iterations = 0;
  std::uint64_t seed = 0;
};

// Lanczos with full reorthogonalization for the k lowest eigenpairs of a
// real symmetric operator. The operator is probed for symmetry on random
// vectors first (NonSymmetricOperatorError). Breakdown of the Krylov
// recurrence restarts the basis with a fresh random direction, so invariant
// subspaces and exact small problems are handled. Throws NotConvergedError
// after max_iter iterations without k residuals below tol.
GroundStateResult lanczos_lowest(const LinearOperator& apply, std::size_t dim, int k,
                                 const LanczosOptions& opts = {});

}  // namespace espec

#endif
