#include "espec/model.hpp"

#include <cmath>
#include <string>

#include "espec/errors.hpp"

namespace espec {

ModelParams validate_params(const ModelParams& raw) {
  if (raw.sites < 4) throw InvalidParamsError("L must be at least 4, got " + std::to_string(raw.sites));
  if (raw.sites % 2 != 0)
    throw InvalidParamsError("L must be even (two-site unit cells), got " + std::to_string(raw.sites));
  if (!std::isfinite(raw.t) || !std::isfinite(raw.delta_t) || !std::isfinite(raw.hubbard_u))
    throw InvalidParamsError("t, delta_t and U must all be finite");
  if (raw.t <= 0.0) throw InvalidParamsError("t must be positive, got " + std::to_string(raw.t));
  return raw;
}

void validate_cut(const ModelParams& params, const CutSpec& cut) {
  int la = cut.subsystem_sites;
  if (la % 2 != 0) throw InvalidParamsError("L_A must be even, got " + std::to_string(la));
  if (la < 2 || la > params.sites - 2)
    throw InvalidParamsError("L_A must lie in [2, L-2], got " + std::to_string(la));
}

std::vector<Bond> chain_bonds(const ModelParams& params, BoundaryCondition bc) {
  const int n = params.sites;
  std::vector<Bond> bonds;
  bonds.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) {
    // 1-indexed site i+1 is odd exactly when the 0-based index i is even
    double amp = (i % 2 == 0) ? params.t + params.delta_t : params.t - params.delta_t;
    bonds.push_back({i, i + 1, amp});
  }
  if (bc == BoundaryCondition::PBC) {
    // wrap bond (L, 1): L is even, so it carries t - delta_t
    bonds.push_back({0, n - 1, params.t - params.delta_t});
  }
  return bonds;
}

Eigen::MatrixXd build_hopping_matrix(const ModelParams& params, BoundaryCondition bc) {
  const int n = params.sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const Bond& bond : chain_bonds(params, bc)) {
    h(bond.a, bond.b) = -bond.amplitude;
    h(bond.b, bond.a) = -bond.amplitude;
  }
  return h;
}

}  // namespace espec
