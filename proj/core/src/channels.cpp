#include "renyi/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "renyi/errors.hpp"

namespace renyi {
namespace {

constexpr double kMergeTolerance = 1e-10;

void check_unit_mass(double total, const char* what) {
  if (std::abs(total - 1.0) > BinaryChannel::kMassTolerance) {
    throw DomainError(std::string(what) + ": likelihoods must sum to 1");
  }
}

// ln Σ v^α over the positive entries, factoring out the largest entry.
double log_sum_pow(std::span<const double> values, double alpha) {
  double largest = 0;
  for (double v : values) {
    largest = std::max(largest, v);
  }
  if (largest <= 0) {
    return -std::numeric_limits<double>::infinity();
  }
  double scaled = 0;
  for (double v : values) {
    if (v > 0) {
      scaled += std::pow(v / largest, alpha);
    }
  }
  return alpha * std::log(largest) + std::log(scaled);
}

double log_sum_exp(std::span<const double> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (double t : terms) {
    top = std::max(top, t);
  }
  if (!std::isfinite(top)) {
    return top;
  }
  double sum = 0;
  for (double t : terms) {
    sum += std::exp(t - top);
  }
  return top + std::log(sum);
}

// Posterior columns p(·|y) for every y with p(y) > 0.
struct Posterior {
  double weight;                  // p(y)
  std::vector<double> given_y;    // p(x|y)
  std::vector<double> joint;      // p(x,y)
};

std::vector<Posterior> posteriors(const JointDistribution& joint) {
  std::vector<Posterior> out;
  const auto py = joint.y_marginal();
  for (std::size_t y = 0; y < joint.y_size(); ++y) {
    if (py[y] <= 0) {
      continue;
    }
    Posterior column{py[y], {}, {}};
    column.given_y.reserve(joint.x_size());
    for (std::size_t x = 0; x < joint.x_size(); ++x) {
      column.joint.push_back(joint(x, y));
      column.given_y.push_back(joint(x, y) / py[y]);
    }
    out.push_back(std::move(column));
  }
  return out;
}

double shannon_conditional(const std::vector<Posterior>& columns) {
  double h = 0;
  for (const auto& column : columns) {
    for (std::size_t x = 0; x < column.given_y.size(); ++x) {
      const double p = column.given_y[x];
      if (p > 0) {
        h -= column.joint[x] * std::log(p);
      }
    }
  }
  return h;
}

double min_entropy_conditional(const std::vector<Posterior>& columns) {
  double guess = 0;
  for (const auto& column : columns) {
    guess += column.weight * *std::max_element(column.given_y.begin(), column.given_y.end());
  }
  return -std::log(guess);
}

double arimoto(const std::vector<Posterior>& columns, double a) {
  // Σ_y p(y) ‖p(·|y)‖_α, each norm computed as m·(Σ (p/m)^α)^(1/α).
  double sum = 0;
  for (const auto& column : columns) {
    const double m = *std::max_element(column.given_y.begin(), column.given_y.end());
    double scaled = 0;
    for (double p : column.given_y) {
      if (p > 0) {
        scaled += std::pow(p / m, a);
      }
    }
    sum += column.weight * m * std::pow(scaled, 1.0 / a);
  }
  return a / (1.0 - a) * std::log(sum);
}

double hayashi(const std::vector<Posterior>& columns, double a) {
  std::vector<double> terms;
  terms.reserve(columns.size());
  for (const auto& column : columns) {
    terms.push_back(std::log(column.weight) + log_sum_pow(column.given_y, a));
  }
  return log_sum_exp(terms) / (1.0 - a);
}

double jizba(const JointDistribution& joint, double a) {
  const auto py = joint.y_marginal();
  return (log_sum_pow(joint.mass(), a) - log_sum_pow(py, a)) / (1.0 - a);
}

double cachin(const std::vector<Posterior>& columns, double a) {
  double sum = 0;
  for (const auto& column : columns) {
    sum += column.weight * log_sum_pow(column.given_y, a);
  }
  return sum / (1.0 - a);
}

}  // namespace

BinaryChannel::BinaryChannel(std::vector<LikelihoodPair> outputs, std::vector<std::string> labels)
    : outputs_(std::move(outputs)), labels_(std::move(labels)) {
  if (outputs_.empty()) {
    throw DomainError("BinaryChannel: output alphabet is empty");
  }
  if (!labels_.empty() && labels_.size() != outputs_.size()) {
    throw DomainError("BinaryChannel: label count does not match output count");
  }
  double total0 = 0;
  double total1 = 0;
  for (const auto& pair : outputs_) {
    if (!(pair.w0 >= 0) || !(pair.w1 >= 0)) {
      throw DomainError("BinaryChannel: likelihoods must be non-negative");
    }
    total0 += pair.w0;
    total1 += pair.w1;
  }
  check_unit_mass(total0, "BinaryChannel W(.|0)");
  check_unit_mass(total1, "BinaryChannel W(.|1)");
}

BinaryChannel make_bsc(double crossover) {
  detail::require_probability(crossover, "make_bsc");
  return BinaryChannel({{1 - crossover, crossover}, {crossover, 1 - crossover}});
}

BinaryChannel make_bec(double erasure) {
  detail::require_probability(erasure, "make_bec");
  return BinaryChannel({{1 - erasure, 0}, {0, 1 - erasure}, {erasure, erasure}});
}

JointDistribution::JointDistribution(std::size_t x_size, std::size_t y_size,
                                     std::vector<double> mass)
    : x_size_(x_size), y_size_(y_size), mass_(std::move(mass)) {
  if (x_size_ == 0 || y_size_ == 0 || mass_.size() != x_size_ * y_size_) {
    throw DomainError("JointDistribution: table shape does not match alphabet sizes");
  }
  double total = 0;
  for (double m : mass_) {
    if (!(m >= 0)) {
      throw DomainError("JointDistribution: negative or NaN mass");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw DomainError("JointDistribution: total mass must be 1");
  }
}

JointDistribution JointDistribution::binary(std::span<const std::array<double, 2>> columns) {
  std::vector<double> mass(2 * columns.size());
  for (std::size_t y = 0; y < columns.size(); ++y) {
    mass[y] = columns[y][0];
    mass[columns.size() + y] = columns[y][1];
  }
  return JointDistribution(2, columns.size(), std::move(mass));
}

std::vector<double> JointDistribution::y_marginal() const {
  std::vector<double> out(y_size_, 0.0);
  for (std::size_t x = 0; x < x_size_; ++x) {
    for (std::size_t y = 0; y < y_size_; ++y) {
      out[y] += (*this)(x, y);
    }
  }
  return out;
}

std::vector<double> JointDistribution::x_marginal() const {
  std::vector<double> out(x_size_, 0.0);
  for (std::size_t x = 0; x < x_size_; ++x) {
    for (std::size_t y = 0; y < y_size_; ++y) {
      out[x] += (*this)(x, y);
    }
  }
  return out;
}

JointDistribution channel_to_joint(const BinaryChannel& channel, double px0) {
  detail::require_probability(px0, "channel_to_joint");
  const std::size_t m = channel.size();
  std::vector<double> mass(2 * m);
  for (std::size_t y = 0; y < m; ++y) {
    mass[y] = px0 * channel[y].w0;
    mass[m + y] = (1 - px0) * channel[y].w1;
  }
  return JointDistribution(2, m, std::move(mass));
}

BinaryChannel joint_to_channel(const JointDistribution& joint) {
  if (!joint.is_binary()) {
    throw DomainError("joint_to_channel: binary input required");
  }
  const auto px = joint.x_marginal();
  if (px[0] <= 0 || px[1] <= 0) {
    throw DomainError("joint_to_channel: both inputs need positive probability");
  }
  std::vector<LikelihoodPair> outputs(joint.y_size());
  for (std::size_t y = 0; y < joint.y_size(); ++y) {
    outputs[y] = {joint(0, y) / px[0], joint(1, y) / px[1]};
  }
  return BinaryChannel(std::move(outputs));
}

JointDistribution product_joint(const JointDistribution& first, const JointDistribution& second) {
  const std::size_t nx = first.x_size() * second.x_size();
  const std::size_t ny = first.y_size() * second.y_size();
  std::vector<double> mass(nx * ny);
  for (std::size_t x1 = 0; x1 < first.x_size(); ++x1) {
    for (std::size_t x2 = 0; x2 < second.x_size(); ++x2) {
      for (std::size_t y1 = 0; y1 < first.y_size(); ++y1) {
        for (std::size_t y2 = 0; y2 < second.y_size(); ++y2) {
          const std::size_t x = x1 * second.x_size() + x2;
          const std::size_t y = y1 * second.y_size() + y2;
          mass[x * ny + y] = first(x1, y1) * second(x2, y2);
        }
      }
    }
  }
  return JointDistribution(nx, ny, std::move(mass));
}

std::string_view to_string(EntropyKind kind) noexcept {
  switch (kind) {
    case EntropyKind::arimoto:
      return "A";
    case EntropyKind::hayashi:
      return "H";
    case EntropyKind::jizba:
      return "J";
    case EntropyKind::cachin:
      return "C";
    case EntropyKind::shannon:
      return "shannon";
    case EntropyKind::min_entropy:
      return "min";
  }
  return "?";
}

EntropyKind parse_entropy_kind(std::string_view text) {
  if (text == "A") return EntropyKind::arimoto;
  if (text == "H") return EntropyKind::hayashi;
  if (text == "J") return EntropyKind::jizba;
  if (text == "C") return EntropyKind::cachin;
  if (text == "shannon") return EntropyKind::shannon;
  if (text == "min") return EntropyKind::min_entropy;
  throw ConfigError("unknown entropy kind '" + std::string(text) + "'");
}

double cond_min_entropy(const JointDistribution& joint) {
  return min_entropy_conditional(posteriors(joint));
}

double cond_entropy(const JointDistribution& joint, const Alpha<double>& alpha, EntropyKind kind) {
  const auto columns = posteriors(joint);
  if (kind == EntropyKind::min_entropy) {
    return min_entropy_conditional(columns);
  }
  if (kind == EntropyKind::shannon || alpha.is_shannon()) {
    return shannon_conditional(columns);
  }
  if (alpha.is_infinite()) {
    if (kind == EntropyKind::arimoto) {
      return min_entropy_conditional(columns);
    }
    throw UnsupportedOrder("cond_entropy: only the Arimoto kind is defined at alpha = inf");
  }
  const double a = alpha.value();
  switch (kind) {
    case EntropyKind::arimoto:
      return arimoto(columns, a);
    case EntropyKind::hayashi:
      return hayashi(columns, a);
    case EntropyKind::jizba:
      return jizba(joint, a);
    case EntropyKind::cachin:
      return cachin(columns, a);
    default:
      break;
  }
  throw DomainError("cond_entropy: unknown kind");
}

double cond_entropy(const BinaryChannel& channel, const Alpha<double>& alpha, EntropyKind kind) {
  return cond_entropy(channel_to_joint(channel), alpha, kind);
}

namespace {

void require_k_kind(const Alpha<double>& alpha, EntropyKind kind) {
  if (kind != EntropyKind::arimoto && kind != EntropyKind::hayashi &&
      kind != EntropyKind::jizba) {
    throw DomainError("K-values exist only for the A, H and J kinds");
  }
  if (alpha.is_shannon()) {
    throw UnsupportedOrder("K-values degenerate at alpha = 1");
  }
  if (alpha.is_infinite() && kind != EntropyKind::arimoto) {
    throw UnsupportedOrder("only K^A is defined at alpha = inf");
  }
}

}  // namespace

double k_cond(const JointDistribution& joint, const Alpha<double>& alpha, EntropyKind kind) {
  require_k_kind(alpha, kind);
  return k_from_entropy(cond_entropy(joint, alpha, kind), alpha, kind);
}

double k_cond_by_decomposition(const JointDistribution& joint, const Alpha<double>& alpha,
                               EntropyKind kind) {
  require_k_kind(alpha, kind);
  if (!joint.is_binary()) {
    throw DomainError("k_cond_by_decomposition: binary input required");
  }
  const auto columns = posteriors(joint);
  std::vector<double> weights;
  weights.reserve(columns.size());
  for (const auto& column : columns) {
    weights.push_back(column.weight);
  }
  if (kind == EntropyKind::jizba) {
    weights = tilt(weights, alpha);
  }
  const KTransform transform =
      kind == EntropyKind::arimoto ? KTransform::arimoto : KTransform::hayashi;
  double k = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const double p = std::clamp(columns[i].given_y[0], 0.0, 1.0);
    k += weights[i] * k_value(p, alpha, transform);
  }
  return k;
}

double entropy_from_k(double k, const Alpha<double>& alpha, EntropyKind kind) {
  require_k_kind(alpha, kind);
  if (kind == EntropyKind::arimoto) {
    return alpha.is_infinite() ? -std::log(k) : alpha.value() / (1 - alpha.value()) * std::log(k);
  }
  return std::log(k) / (1 - alpha.value());
}

double k_from_entropy(double h, const Alpha<double>& alpha, EntropyKind kind) {
  require_k_kind(alpha, kind);
  if (kind == EntropyKind::arimoto) {
    return alpha.is_infinite() ? std::exp(-h) : std::exp((1 - alpha.value()) / alpha.value() * h);
  }
  return std::exp((1 - alpha.value()) * h);
}

std::vector<double> tilt(std::span<const double> distribution, const Alpha<double>& alpha) {
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("tilt: finite order required");
  }
  double largest = 0;
  for (double p : distribution) {
    if (!(p >= 0)) {
      throw DomainError("tilt: negative or NaN entry");
    }
    largest = std::max(largest, p);
  }
  if (largest == 0) {
    throw DomainError("tilt: all-zero vector");
  }
  std::vector<double> out(distribution.size());
  double total = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    out[i] = distribution[i] > 0 ? std::pow(distribution[i] / largest, alpha.value()) : 0.0;
    total += out[i];
  }
  for (double& v : out) {
    v /= total;
  }
  return out;
}

BinaryChannel merge_equivalent_outputs(const BinaryChannel& channel) {
  const auto outputs = channel.outputs();
  std::vector<std::size_t> order;
  for (std::size_t y = 0; y < outputs.size(); ++y) {
    if (outputs[y].w0 + outputs[y].w1 > 0) {
      order.push_back(y);
    }
  }
  auto posterior = [&](std::size_t y) {
    return outputs[y].w0 / (outputs[y].w0 + outputs[y].w1);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return posterior(a) < posterior(b); });

  struct Group {
    std::size_t first_index;
    std::size_t representative;
    LikelihoodPair sum;
  };
  std::vector<Group> groups;
  for (std::size_t y : order) {
    const auto& pair = outputs[y];
    if (!groups.empty()) {
      auto& group = groups.back();
      const auto& rep = outputs[group.representative];
      const double cross = pair.w0 * rep.w1 - rep.w0 * pair.w1;
      const double scale = (pair.w0 + pair.w1) * (rep.w0 + rep.w1);
      if (std::abs(cross) <= kMergeTolerance * scale) {
        group.first_index = std::min(group.first_index, y);
        group.sum.w0 += pair.w0;
        group.sum.w1 += pair.w1;
        continue;
      }
    }
    groups.push_back({y, y, pair});
  }
  std::sort(groups.begin(), groups.end(),
            [](const Group& a, const Group& b) { return a.first_index < b.first_index; });
  std::vector<LikelihoodPair> merged;
  merged.reserve(groups.size());
  for (const auto& group : groups) {
    merged.push_back(group.sum);
  }
  return BinaryChannel(std::move(merged));
}

BinaryChannel random_channel(std::mt19937_64& rng, std::size_t outputs) {
  if (outputs == 0) {
    throw DomainError("random_channel: need at least one output");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> row0(outputs);
  std::vector<double> row1(outputs);
  for (std::size_t y = 0; y < outputs; ++y) {
    row0[y] = unit(rng) + 1e-3;
    row1[y] = unit(rng) + 1e-3;
  }
  const double total0 = std::accumulate(row0.begin(), row0.end(), 0.0);
  const double total1 = std::accumulate(row1.begin(), row1.end(), 0.0);
  std::vector<LikelihoodPair> pairs(outputs);
  for (std::size_t y = 0; y < outputs; ++y) {
    pairs[y] = {row0[y] / total0, row1[y] / total1};
  }
  return BinaryChannel(std::move(pairs));
}

JointDistribution random_joint(std::mt19937_64& rng, std::size_t outputs) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> mass(2 * outputs);
  double total = 0;
  for (double& m : mass) {
    m = unit(rng) + 1e-3;
    total += m;
  }
  for (double& m : mass) {
    m /= total;
  }
  return JointDistribution(2, outputs, std::move(mass));
}

}  // namespace renyi
