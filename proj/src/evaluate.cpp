#include "eog/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "eog/errors.hpp"

namespace eog {

std::size_t ConfusionMatrix::correct() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < 6; ++k) n += counts[k][k];
  return n;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (const auto& row : counts) {
    for (auto c : row) n += c;
  }
  return n;
}

std::size_t ConfusionMatrix::total_false_positives() const {
  std::size_t n = 0;
  for (auto c : false_positives) n += c;
  return n;
}

double ConfusionMatrix::accuracy() const {
  const auto t = total();
  return t == 0 ? 0.0 : static_cast<double>(correct()) / static_cast<double>(t);
}

ConfusionMatrix evaluate(std::span<const MovementEvent> predicted,
                         std::span<const GroundTruthLabel> truth, double tolerance) {
  if (!(tolerance > 0.0)) throw ParameterError("evaluation tolerance must be positive");

  for (const auto& t : truth) {
    if (t.kind == MovementKind::Neutral) throw ContractError("Neutral ground-truth label");
  }
  for (const auto& p : predicted) {
    if (p.kind == MovementKind::Neutral) throw ContractError("Neutral predicted event");
  }

  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t j = 0; j < predicted.size(); ++j) {
      const double d = std::abs(truth[i].onset - predicted[j].onset);
      if (d <= tolerance) pairs.emplace_back(d, i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<bool> truth_used(truth.size()), pred_used(predicted.size());
  ConfusionMatrix m;
  for (const auto& [d, i, j] : pairs) {
    if (truth_used[i] || pred_used[j]) continue;
    truth_used[i] = pred_used[j] = true;
    m.counts[static_cast<std::size_t>(truth[i].kind)][static_cast<std::size_t>(predicted[j].kind)]++;
  }
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (!truth_used[i]) m.counts[static_cast<std::size_t>(truth[i].kind)][ConfusionMatrix::kMissed]++;
  }
  for (std::size_t j = 0; j < predicted.size(); ++j) {
    if (!pred_used[j]) m.false_positives[static_cast<std::size_t>(predicted[j].kind)]++;
  }
  return m;
}

}  // namespace eog
