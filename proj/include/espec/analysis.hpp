#ifndef ESPEC_ANALYSIS_HPP
#define ESPEC_ANALYSIS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "espec/spectrum.hpp"

namespace espec {

// Levels whose weights agree within rel_tol * lambda_max, single-linkage.
struct DegeneracyGroup {
  double xi_rep = 0.0;           // mean xi of the members
  std::vector<ESLevel> members;  // sorted by xi
  int multiplicity = 0;
};

// Single-linkage grouping on weights: adjacent levels (sorted by descending
// weight) join one group when their weights differ by at most
// rel_tol * lambda_max of the whole spectrum. Groups come out ordered by
// descending weight, i.e. ascending xi.
std::vector<DegeneracyGroup> group_levels(const EntanglementSpectrum& spectrum, double rel_tol);

// Multiplicity of the group with the largest weight. EmptySpectrumError on
// an empty grouping.
int ground_multiplicity(const std::vector<DegeneracyGroup>& groups);

// Counts by subsystem particle label inside one group.
std::map<std::pair<int, int>, int> distribution(const DegeneracyGroup& group);

enum class PhaseTag {
  NonDegenerate,
  Sixteenfold,
  FourfoldDiagonal,      // quadruplet labels offset along (d, d): paired-particle edge mode
  FourfoldAntidiagonal,  // offsets along (d, -d): particle-hole-paired edge mode
  Other,
};

std::string to_string(PhaseTag tag);

struct PhaseSignature {
  PhaseTag tag = PhaseTag::Other;
  int ground_multiplicity = 0;
  double splitting = 0.0;  // relative weight spread within the ground group
};

// "Other(m)" for the Other tag, the tag name otherwise.
std::string signature_label(const PhaseSignature& signature);

// Tag rules: multiplicity 1 -> NonDegenerate, 16 -> Sixteenfold, 4 with all
// pairwise label offsets on the (d, d) diagonal -> FourfoldDiagonal, 4 with
// offsets on the (d, -d) antidiagonal -> FourfoldAntidiagonal, anything
// else -> Other. Offsets are pairwise, never absolute, so the bulk particle
// count drops out.
PhaseSignature classify(const std::vector<DegeneracyGroup>& groups);

// Largest |weight difference| between the two spectra after matching levels
// by (n_up, n_down) label and descending weight; a level missing on one
// side counts as weight 0. Pairs with both weights below min_weight are
// ignored. Used for cross-engine and symmetry checks.
double spectra_weight_mismatch(const EntanglementSpectrum& a, const EntanglementSpectrum& b,
                               double min_weight);

}  // namespace espec

#endif
