#ifndef ESPEC_FREEFERMION_HPP
#define ESPEC_FREEFERMION_HPP

#include <Eigen/Dense>
#include <vector>

#include "espec/model.hpp"
#include "espec/spectrum.hpp"

namespace espec {

// Ground-state correlation matrix G_ij = <c^dag_i c_j> at the given filling:
// the projector onto the span of the lowest fill_count orbitals of the
// hopping matrix. Throws GaplessError when the single-particle gap between
// orbitals fill_count and fill_count+1 is below 1e-9.
Eigen::MatrixXd ground_correlation_matrix(const Eigen::MatrixXd& hopping, int fill_count);

// Leading L_A x L_A principal block of G (subsystem A = sites 1..L_A).
Eigen::MatrixXd subsystem_block(const Eigen::MatrixXd& correlation, const CutSpec& cut);

// Eigenvalues f_l of a subsystem correlation matrix, ascending, clamped
// into [0, 1] when within 1e-12 of the interval; SpectrumOutOfRange beyond.
std::vector<double> mode_spectrum(const Eigen::MatrixXd& subsystem_correlation);

struct FreeEngineOptions {
  int max_levels = 256;
  double xi_window = 8.0;  // keep levels with xi <= xi_min + xi_window
};

// Single-species entanglement levels from mode occupations f_l. A level for
// occupation pattern {n_l} has weight prod f^n (1-f)^(1-n) and xi = -ln of
// that; the lowest levels are generated by a best-first walk over per-mode
// flip costs |ln(f/(1-f))|. Modes with f within 1e-12 of 0 or 1 are frozen
// at their cheap occupation (their exact -ln contribution still counts).
// Labels: n_up = pattern particle count, n_down = 0.
EntanglementSpectrum enumerate_levels(const std::vector<double>& modes, int max_levels,
                                      double xi_window);

// Lowest max_levels of the pairwise sums xi_up + xi_down via a best-first
// merge; labels take n_up from `up` and n_down from `down`'s particle count.
EntanglementSpectrum combine_spins(const EntanglementSpectrum& up, const EntanglementSpectrum& down,
                                   int max_levels);

// Full U = 0 pipeline at half filling (PBC, n_fill = L/2 per spin):
// hopping -> correlation matrix -> subsystem block -> mode spectrum ->
// per-spin levels -> spin combination. Throws EngineMismatchError if U != 0.
EntanglementSpectrum free_entanglement_spectrum(const ModelParams& params, const CutSpec& cut,
                                                const FreeEngineOptions& opts = {});

}  // namespace espec

#endif
