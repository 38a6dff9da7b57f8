#ifndef ESPEC_MODEL_HPP
#define ESPEC_MODEL_HPP

#include <Eigen/Dense>
#include <vector>

namespace espec {

// Parameters of the dimerized Hubbard chain. Sites are numbered 1..L in
// documentation and 0..L-1 internally; bond (i, i+1) carries hopping
// t + delta_t when i is odd and t - delta_t when i is even (1-indexed).
struct ModelParams {
  int sites = 0;          // L, even, >= 4
  double t = 1.0;         // reference hopping, > 0
  double delta_t = 0.0;   // dimerization; |delta_t| > t is allowed
  double hubbard_u = 0.0; // on-site interaction between opposite spins
};

enum class BoundaryCondition { PBC, OBC };

// Subsystem A = sites 1..subsystem_sites of the chain.
struct CutSpec {
  int subsystem_sites = 0;  // even, in [2, L-2]
};

// One hopping bond; `amplitude` is the positive-convention strength
// (t +/- delta_t), entering the Hamiltonian as -amplitude.
struct Bond {
  int a = 0;  // 0-based site indices, a < b
  int b = 0;
  double amplitude = 0.0;
};

// Throws InvalidParamsError unless all ModelParams invariants hold;
// returns the params unchanged otherwise.
ModelParams validate_params(const ModelParams& raw);

// Throws InvalidParamsError unless the cut is even and in [2, L-2].
void validate_cut(const ModelParams& params, const CutSpec& cut);

// Bond list of the chain: (i, i+1) for i = 1..L-1 plus the wrap bond
// (L, 1) under PBC. Order: chain bonds ascending, wrap bond last.
std::vector<Bond> chain_bonds(const ModelParams& params, BoundaryCondition bc);

// Dense single-particle hopping matrix h with h(i, j) = -amplitude on each
// bond, exactly symmetric. Same matrix for both spin species.
Eigen::MatrixXd build_hopping_matrix(const ModelParams& params, BoundaryCondition bc);

}  // namespace espec

#endif
