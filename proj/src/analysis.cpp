#include "espec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "espec/errors.hpp"

namespace espec {

std::vector<DegeneracyGroup> group_levels(const EntanglementSpectrum& spectrum, double rel_tol) {
  std::vector<ESLevel> levels = spectrum.levels;
  sort_levels(levels);

  std::vector<DegeneracyGroup> groups;
  if (levels.empty()) return groups;
  const double link = rel_tol * levels.front().weight;

  DegeneracyGroup current;
  current.members.push_back(levels.front());
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i - 1].weight - levels[i].weight > link) {
      groups.push_back(std::move(current));
      current = DegeneracyGroup{};
    }
    current.members.push_back(levels[i]);
  }
  groups.push_back(std::move(current));

  for (DegeneracyGroup& group : groups) {
    group.multiplicity = static_cast<int>(group.members.size());
    double sum = 0.0;
    for (const ESLevel& level : group.members) sum += level.xi;
    group.xi_rep = sum / group.multiplicity;
  }
  return groups;
}

int ground_multiplicity(const std::vector<DegeneracyGroup>& groups) {
  if (groups.empty()) throw EmptySpectrumError("no degeneracy groups: empty spectrum");
  return groups.front().multiplicity;
}

std::map<std::pair<int, int>, int> distribution(const DegeneracyGroup& group) {
  std::map<std::pair<int, int>, int> counts;
  for (const ESLevel& level : group.members) ++counts[{level.n_up, level.n_down}];
  return counts;
}

std::string to_string(PhaseTag tag) {
  switch (tag) {
    case PhaseTag::NonDegenerate: return "NonDegenerate";
    case PhaseTag::Sixteenfold: return "Sixteenfold";
    case PhaseTag::FourfoldDiagonal: return "FourfoldDiagonal";
    case PhaseTag::FourfoldAntidiagonal: return "FourfoldAntidiagonal";
    case PhaseTag::Other: return "Other";
  }
  return "Other";
}

std::string signature_label(const PhaseSignature& signature) {
  if (signature.tag == PhaseTag::Other)
    return "Other(" + std::to_string(signature.ground_multiplicity) + ")";
  return to_string(signature.tag);
}

namespace {

// All pairwise label offsets lie on the line (d, sign*d). The attractive
// quadruplet is a pair-mode product state set spanning three diagonal cells
// (counts 1-2-1), so offsets up to +-(2,2) occur; the repulsive quadruplet
// mirrors this across n_down.
bool offsets_on_line(const std::vector<ESLevel>& members, int sign) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int ou = members[i].n_up - members[j].n_up;
      int od = members[i].n_down - members[j].n_down;
      if (ou != sign * od) return false;
    }
  return true;
}

}  // namespace

PhaseSignature classify(const std::vector<DegeneracyGroup>& groups) {
  if (groups.empty()) throw EmptySpectrumError("cannot classify an empty spectrum");
  const DegeneracyGroup& ground = groups.front();

  PhaseSignature signature;
  signature.ground_multiplicity = ground.multiplicity;
  double w_max = ground.members.front().weight;
  double w_min = ground.members.back().weight;
  signature.splitting = (w_max - w_min) / w_max;

  switch (ground.multiplicity) {
    case 1: signature.tag = PhaseTag::NonDegenerate; break;
    case 16: signature.tag = PhaseTag::Sixteenfold; break;
    case 4:
      if (offsets_on_line(ground.members, +1))
        signature.tag = PhaseTag::FourfoldDiagonal;
      else if (offsets_on_line(ground.members, -1))
        signature.tag = PhaseTag::FourfoldAntidiagonal;
      else
        signature.tag = PhaseTag::Other;
      break;
    default: signature.tag = PhaseTag::Other; break;
  }
  return signature;
}

double spectra_weight_mismatch(const EntanglementSpectrum& a, const EntanglementSpectrum& b,
                               double min_weight) {
  std::map<std::pair<int, int>, std::vector<double>> by_label_a, by_label_b;
  for (const ESLevel& level : a.levels) by_label_a[{level.n_up, level.n_down}].push_back(level.weight);
  for (const ESLevel& level : b.levels) by_label_b[{level.n_up, level.n_down}].push_back(level.weight);

  for (auto& [key, w] : by_label_a) std::sort(w.begin(), w.end(), std::greater<>());
  for (auto& [key, w] : by_label_b) std::sort(w.begin(), w.end(), std::greater<>());

  std::set<std::pair<int, int>> keys;
  for (const auto& [key, w] : by_label_a) keys.insert(key);
  for (const auto& [key, w] : by_label_b) keys.insert(key);

  double worst = 0.0;
  static const std::vector<double> kEmpty;
  for (const auto& key : keys) {
    auto ita = by_label_a.find(key);
    auto itb = by_label_b.find(key);
    const std::vector<double>& wa = ita == by_label_a.end() ? kEmpty : ita->second;
    const std::vector<double>& wb = itb == by_label_b.end() ? kEmpty : itb->second;
    std::size_t n = std::max(wa.size(), wb.size());
    for (std::size_t i = 0; i < n; ++i) {
      double va = i < wa.size() ? wa[i] : 0.0;
      double vb = i < wb.size() ? wb[i] : 0.0;
      if (std::max(va, vb) <= min_weight) continue;
      worst = std::max(worst, std::abs(va - vb));
    }
  }
  return worst;
}

}  // namespace espec
