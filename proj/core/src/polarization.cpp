#include "renyi/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "renyi/combining.hpp"
#include "renyi/errors.hpp"

namespace renyi {

BinaryChannel polar_minus(const BinaryChannel& first, const BinaryChannel& second) {
  std::vector<LikelihoodPair> out;
  out.reserve(first.size() * second.size());
  for (const LikelihoodPair& a : first.outputs()) {
    for (const LikelihoodPair& b : second.outputs()) {
      out.push_back({0.5 * (a.w0 * b.w0 + a.w1 * b.w1), 0.5 * (a.w1 * b.w0 + a.w0 * b.w1)});
    }
  }
  return BinaryChannel(std::move(out));
}

BinaryChannel polar_plus(const BinaryChannel& first, const BinaryChannel& second) {
  std::vector<LikelihoodPair> out;
  out.reserve(2 * first.size() * second.size());
  for (const LikelihoodPair& a : first.outputs()) {
    for (const LikelihoodPair& b : second.outputs()) {
      out.push_back({0.5 * a.w0 * b.w0, 0.5 * a.w1 * b.w1});  // u₁ = 0
      out.push_back({0.5 * a.w1 * b.w0, 0.5 * a.w0 * b.w1});  // u₁ = 1
    }
  }
  return BinaryChannel(std::move(out));
}

double mutual_info_J(const BinaryChannel& w, const Alpha<double>& alpha) {
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("mutual_info_J: finite order required");
  }
  return std::log(2.0) - cond_entropy(w, alpha, EntropyKind::jizba);
}

PolarConditions check_polar_conditions(const BinaryChannel& w, const Alpha<double>& alpha) {
  const double base = mutual_info_J(w, alpha);
  const double minus = mutual_info_J(polar_minus(w), alpha);
  const double plus = mutual_info_J(polar_plus(w), alpha);
  return {plus + minus - 2 * base, 0.5 * (plus - minus)};
}

double kappa_estimate(const Alpha<double>& alpha, double a, double b, std::size_t grid_n) {
  if (!(0 < a && a < b && b < 1)) {
    throw ConfigError("kappa_estimate: need 0 < a < b < 1");
  }
  if (grid_n < 2) {
    throw ConfigError("kappa_estimate: grid needs at least two points");
  }
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("kappa_estimate: finite order required");
  }
  bool use_bec = false;
  if (!alpha.is_shannon()) {
    const RegimeInfo regime = convexity_regime(KKKind::kk_hayashi, alpha);
    const Orientation orientation = orientation_for(regime, alpha);
    if (!regime.proven || orientation == Orientation::undetermined) {
      throw UnsupportedOrder("kappa_estimate: no proven bound at this order");
    }
    use_bec = orientation == Orientation::bsc_upper;
  }
  const double ln2 = std::log(2.0);
  const double h_lo = ln2 * (1 - b);
  const double h_hi = ln2 * (1 - a);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double h = h_lo + (h_hi - h_lo) * static_cast<double>(i) / static_cast<double>(grid_n - 1);
    double lower;
    if (use_bec) {
      const double k = k_from_entropy(h, alpha, EntropyKind::jizba);
      lower = bec_bound(k, k, alpha, EntropyKind::jizba);
    } else {
      lower = bsc_bound(h, h, alpha);
    }
    // H^J(W⁻) − H^J(W) = I(W) − I(W⁻) = ½[I(W⁺) − I(W⁻)].
    best = std::min(best, (lower - h) / ln2);
  }
  return best;
}

void validate(const PolarConfig& config) {
  if (!(0 < config.a && config.a < config.b && config.b < 1)) {
    throw ConfigError("polarize: thresholds must satisfy 0 < a < b < 1");
  }
  if (config.alpha.is_infinite()) {
    throw ConfigError("polarize: I^J needs a finite order");
  }
  if (config.merge_policy == MergePolicy::posterior_merge) {
    if (!config.alpha.is_shannon()) {
      throw ConfigError("polarize: posterior merging changes the Jizba entropy; only alpha = 1 allows it");
    }
    if (config.max_depth > 12) {
      throw ConfigError("polarize: depth is capped at 12 with merging");
    }
  } else if (config.max_depth > 4) {
    throw ConfigError("polarize: depth is capped at 4 without merging");
  }
}

namespace {

// Output alphabet with multiplicities. Entries are stored with w0 ≥ w1.
struct Compact {
  std::vector<LikelihoodPair> pairs;
  std::vector<double> count;
};

constexpr std::size_t kEntryBudget = 20'000'000;
constexpr double kSameValue = 1e-13;

bool close(double x, double y) {
  return std::abs(x - y) <= kSameValue * std::max(std::abs(x), std::abs(y));
}

Compact group(std::vector<LikelihoodPair> pairs, std::vector<double> count, bool by_posterior) {
  std::vector<std::size_t> order;
  order.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].w1 > pairs[i].w0) {
      std::swap(pairs[i].w0, pairs[i].w1);
    }
    if (pairs[i].w0 > 0) {
      order.push_back(i);
    }
  }
  auto ratio = [&](std::size_t i) { return pairs[i].w1 / (pairs[i].w0 + pairs[i].w1); };
  if (by_posterior) {
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return ratio(l) < ratio(r); });
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return pairs[l].w0 != pairs[r].w0 ? pairs[l].w0 < pairs[r].w0 : pairs[l].w1 < pairs[r].w1;
    });
  }
  Compact out;
  for (std::size_t i : order) {
    const LikelihoodPair& p = pairs[i];
    if (!out.pairs.empty()) {
      LikelihoodPair& last = out.pairs.back();
      double& n = out.count.back();
      if (by_posterior) {
        const double r = p.w1 / (p.w0 + p.w1);
        const double r_last = last.w1 / (last.w0 + last.w1);
        if (std::abs(r - r_last) <= 1e-12) {
          last.w0 = n * last.w0 + count[i] * p.w0;
          last.w1 = n * last.w1 + count[i] * p.w1;
          n = 1;
          continue;
        }
      } else if (close(p.w0, last.w0) && close(p.w1, last.w1)) {
        const double total = n + count[i];
        last.w0 = (n * last.w0 + count[i] * p.w0) / total;
        last.w1 = (n * last.w1 + count[i] * p.w1) / total;
        n = total;
        continue;
      }
    }
    out.pairs.push_back(p);
    out.count.push_back(count[i]);
  }
  return out;
}

Compact compact(const BinaryChannel& w, bool by_posterior) {
  std::vector<LikelihoodPair> pairs(w.outputs().begin(), w.outputs().end());
  return group(std::move(pairs), std::vector<double>(w.size(), 1.0), by_posterior);
}

void check_budget(std::size_t entries) {
  if (entries > kEntryBudget) {
    throw ConfigError("polarize: synthetic channel alphabet exceeds " +
                      std::to_string(kEntryBudget) + " distinct outputs");
  }
}

Compact transform(const Compact& a, const Compact& b, bool plus, bool by_posterior) {
  const std::size_t entries = a.pairs.size() * b.pairs.size() * (plus ? 2 : 1);
  check_budget(entries);
  std::vector<LikelihoodPair> pairs;
  std::vector<double> count;
  pairs.reserve(entries);
  count.reserve(entries);
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    const LikelihoodPair& x = a.pairs[i];
    for (std::size_t j = 0; j < b.pairs.size(); ++j) {
      const LikelihoodPair& y = b.pairs[j];
      const double n = a.count[i] * b.count[j];
      if (plus) {
        pairs.push_back({0.5 * x.w0 * y.w0, 0.5 * x.w1 * y.w1});
        pairs.push_back({0.5 * x.w1 * y.w0, 0.5 * x.w0 * y.w1});
        count.push_back(n);
        count.push_back(n);
      } else {
        pairs.push_back({0.5 * (x.w0 * y.w0 + x.w1 * y.w1), 0.5 * (x.w1 * y.w0 + x.w0 * y.w1)});
        count.push_back(n);
      }
    }
  }
  return group(std::move(pairs), std::move(count), by_posterior);
}

double log_sum(const std::vector<double>& logs) {
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0;
  for (double v : logs) {
    sum += std::exp(v - top);
  }
  return top + std::log(sum);
}

// I^J normalized by ln 2, with uniform input.
double normalized_info(const Compact& w, const Alpha<double>& alpha) {
  const double ln2 = std::log(2.0);
  double h = 0;
  if (alpha.is_shannon()) {
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
      const auto [w0, w1] = w.pairs[i];
      const double py = 0.5 * (w0 + w1);
      for (double wx : {w0, w1}) {
        if (wx > 0) {
          h -= w.count[i] * 0.5 * wx * std::log(0.5 * wx / py);
        }
      }
    }
  } else {
    const double a = alpha.value();
    std::vector<double> joint;
    std::vector<double> marginal;
    joint.reserve(2 * w.pairs.size());
    marginal.reserve(w.pairs.size());
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
      const auto [w0, w1] = w.pairs[i];
      const double ln_n = std::log(w.count[i]);
      for (double wx : {w0, w1}) {
        if (wx > 0) {
          joint.push_back(ln_n + a * std::log(wx));
        }
      }
      marginal.push_back(ln_n + a * std::log(w0 + w1));
    }
    h = (log_sum(joint) - log_sum(marginal)) / (1 - a);
  }
  return (ln2 - h) / ln2;
}

struct Slot {
  Compact channel;
  std::string path;
  std::size_t block;
};

void record_level(PolarTree& tree, const std::vector<Slot>& slots, std::size_t level,
                  const PolarConfig& config) {
  std::vector<double> values;
  values.reserve(slots.size());
  for (const Slot& slot : slots) {
    const double i_value = normalized_info(slot.channel, config.alpha);
    values.push_back(i_value);
    tree.nodes.push_back({slot.path, level, slot.block, i_value, slot.channel.pairs.size()});
  }
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double variance = 0;
  std::size_t low = 0;
  std::size_t high = 0;
  for (double v : values) {
    variance += (v - mean) * (v - mean);
    low += v < config.a ? 1 : 0;
    high += v > config.b ? 1 : 0;
  }
  variance /= n;
  const double frac_low = static_cast<double>(low) / n;
  const double frac_high = static_cast<double>(high) / n;
  tree.stats.push_back({level, mean, variance, frac_low, 1 - frac_low - frac_high, frac_high});
}

}  // namespace

PolarTree polarize_tree(const BinaryChannel& w, const PolarConfig& config) {
  validate(config);
  const bool merge = config.merge_policy == MergePolicy::posterior_merge;
  PolarTree tree;
  std::vector<Slot> level{{compact(w, merge), "", 0}};
  record_level(tree, level, 0, config);
  for (std::size_t depth = 1; depth <= config.max_depth; ++depth) {
    std::vector<Slot> next;
    next.reserve(2 * level.size());
    for (const Slot& slot : level) {
      next.push_back({transform(slot.channel, slot.channel, false, merge), slot.path + "-", 0});
      next.push_back({transform(slot.channel, slot.channel, true, merge), slot.path + "+", 0});
    }
    level = std::move(next);
    record_level(tree, level, depth, config);
  }
  return tree;
}

PolarTree polarize_tree(const std::vector<BinaryChannel>& sequence, const PolarConfig& config) {
  validate(config);
  if (sequence.size() != (std::size_t{1} << config.max_depth)) {
    throw ConfigError("polarize: a channel sequence must have 2^depth entries");
  }
  const bool merge = config.merge_policy == MergePolicy::posterior_merge;
  PolarTree tree;
  // blocks[k] holds the 2^ℓ synthetic channels built from leaves
  // k·2^ℓ … (k+1)·2^ℓ − 1, indexed by their path.
  std::vector<std::vector<Slot>> blocks;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    blocks.push_back({{compact(sequence[k], merge), "", k}});
  }
  auto flatten = [](const std::vector<std::vector<Slot>>& bs) {
    std::vector<Slot> all;
    for (const auto& b : bs) {
      all.insert(all.end(), b.begin(), b.end());
    }
    return all;
  };
  record_level(tree, flatten(blocks), 0, config);
  for (std::size_t depth = 1; depth <= config.max_depth; ++depth) {
    std::vector<std::vector<Slot>> next(blocks.size() / 2);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const auto& left = blocks[2 * k];
      const auto& right = blocks[2 * k + 1];
      for (std::size_t s = 0; s < left.size(); ++s) {
        next[k].push_back({transform(left[s].channel, right[s].channel, false, merge),
                           left[s].path + "-", k});
        next[k].push_back({transform(left[s].channel, right[s].channel, true, merge),
                           left[s].path + "+", k});
      }
    }
    blocks = std::move(next);
    record_level(tree, flatten(blocks), depth, config);
  }
  return tree;
}

std::string polar_nodes_csv(const PolarTree& tree) {
  std::string out = "path,level,i_value\n";
  for (const PolarNode& node : tree.nodes) {
    out += node.path + "," + std::to_string(node.level) + "," + format_real(node.i_value) + "\n";
  }
  return out;
}

std::string polar_stats_json(const PolarTree& tree) {
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const LevelStats& s : tree.stats) {
    levels.push_back({{"level", s.level},
                      {"mean", s.mean},
                      {"variance", s.variance},
                      {"frac_low", s.frac_low},
                      {"frac_mid", s.frac_mid},
                      {"frac_high", s.frac_high}});
  }
  return levels.dump(2) + "\n";
}

}  // namespace renyi
