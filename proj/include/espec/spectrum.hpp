#ifndef ESPEC_SPECTRUM_HPP
#define ESPEC_SPECTRUM_HPP

#include <vector>

namespace espec {

// One entanglement level: xi = -ln(weight) with the subsystem particle
// numbers of the reduced-density-matrix block it came from.
struct ESLevel {
  double xi = 0.0;
  int n_up = 0;
  int n_down = 0;
  double weight = 0.0;  // e^{-xi}, in (0, 1]
};

struct EntanglementSpectrum {
  std::vector<ESLevel> levels;  // sorted by xi ascending
  bool complete = false;        // true when nothing was truncated away
  int truncated_levels = 0;     // eigenvalues dropped below the weight floor (ED engine)
};

// Sum of weights; equals 1 within 1e-10 for complete spectra.
double weight_sum(const EntanglementSpectrum& spectrum);

// Canonical order: by xi, then labels. Ties in xi are exact-double ties,
// so the order is reproducible.
void sort_levels(std::vector<ESLevel>& levels);

}  // namespace espec

#endif
