#include "espec/spectrum.hpp"

#include <algorithm>
#include <tuple>

namespace espec {

double weight_sum(const EntanglementSpectrum& spectrum) {
  double sum = 0.0;
  // ascending xi = descending weight; add small weights first
  for (auto it = spectrum.levels.rbegin(); it != spectrum.levels.rend(); ++it) sum += it->weight;
  return sum;
}

void sort_levels(std::vector<ESLevel>& levels) {
  std::sort(levels.begin(), levels.end(), [](const ESLevel& a, const ESLevel& b) {
    return std::tie(a.xi, a.n_up, a.n_down) < std::tie(b.xi, b.n_up, b.n_down);
  });
}

}  // namespace espec
