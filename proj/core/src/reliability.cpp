#include "hapecon/reliability.hpp"

#include <cmath>
#include <thread>

#include "hapecon/domain.hpp"
#include "hapecon/error.hpp"

namespace hapecon {

namespace {

constexpr std::int64_t kOne = Availability::one;

PathModel composite(PathModel::Kind kind, std::vector<PathModel> children) {
  if (children.empty()) {
    throw Error(ErrorCode::validation, "series/parallel block needs at least one child");
  }
  if (kind == PathModel::Kind::series) return PathModel::series(std::move(children));
  return PathModel::parallel(std::move(children));
}

std::int64_t exact_raw(const PathModel& model) {
  switch (model.kind()) {
    case PathModel::Kind::leaf:
      return model.availability().raw();
    case PathModel::Kind::reference:
      throw Error(ErrorCode::missing_parameter,
                  "component '" + model.label() + "' has no availability bound");
    case PathModel::Kind::series: {
      int128 acc = kOne;
      for (const auto& child : model.children()) {
        acc = div_half_up(acc * exact_raw(child), kOne);
      }
      return static_cast<std::int64_t>(acc);
    }
    case PathModel::Kind::parallel: {
      int128 down = kOne;
      for (const auto& child : model.children()) {
        down = div_half_up(down * (kOne - exact_raw(child)), kOne);
      }
      return static_cast<std::int64_t>(kOne - down);
    }
  }
  return 0;
}

// Evaluates one trial, consuming exactly one draw per leaf.
bool trial_up(const PathModel& model, SplitMix64& rng) {
  switch (model.kind()) {
    case PathModel::Kind::leaf:
      return rng.uniform() < model.availability().to_double();
    case PathModel::Kind::reference:
      throw Error(ErrorCode::missing_parameter,
                  "component '" + model.label() + "' has no availability bound");
    case PathModel::Kind::series: {
      bool up = true;
      for (const auto& child : model.children()) up = trial_up(child, rng) && up;
      return up;
    }
    case PathModel::Kind::parallel: {
      bool up = false;
      for (const auto& child : model.children()) up = trial_up(child, rng) || up;
      return up;
    }
  }
  return false;
}

}  // namespace

PathModel PathModel::leaf(std::string label, Availability availability) {
  PathModel m;
  m.kind_ = Kind::leaf;
  m.label_ = std::move(label);
  m.availability_ = availability;
  return m;
}

PathModel PathModel::reference(std::string label) {
  PathModel m;
  m.kind_ = Kind::reference;
  m.label_ = std::move(label);
  return m;
}

PathModel PathModel::series(std::vector<PathModel> children) {
  if (children.empty()) throw Error(ErrorCode::validation, "series block needs at least one child");
  PathModel m;
  m.kind_ = Kind::series;
  m.children_ = std::move(children);
  return m;
}

PathModel PathModel::parallel(std::vector<PathModel> children) {
  if (children.empty()) throw Error(ErrorCode::validation, "parallel block needs at least one child");
  PathModel m;
  m.kind_ = Kind::parallel;
  m.children_ = std::move(children);
  return m;
}

std::size_t PathModel::leaf_count() const {
  if (kind_ == Kind::leaf || kind_ == Kind::reference) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

PathModel bind(const PathModel& model, const std::map<std::string, Availability>& components) {
  switch (model.kind()) {
    case PathModel::Kind::leaf:
      return model;
    case PathModel::Kind::reference: {
      const auto it = components.find(model.label());
      if (it == components.end()) {
        throw Error(ErrorCode::missing_parameter, "component availability '" + model.label() + "'");
      }
      return PathModel::leaf(model.label(), it->second);
    }
    case PathModel::Kind::series:
    case PathModel::Kind::parallel: {
      std::vector<PathModel> children;
      children.reserve(model.children().size());
      for (const auto& c : model.children()) children.push_back(bind(c, components));
      return composite(model.kind(), std::move(children));
    }
  }
  return model;
}

Availability exact_path_availability(const PathModel& model) {
  // A parallel block can round up to exactly 1; keep it strictly below.
  return Availability::from_raw(std::min(exact_raw(model), kOne - 1));
}

Availability path_availability(const PathModel& model) {
  const std::int64_t exact = exact_path_availability(model).raw();
  const auto reported = static_cast<std::int64_t>(div_half_up(exact, 1000) * 1000);
  return Availability::from_raw(reported < kOne ? reported : exact);
}

Fixed<2> downtime_per_year(Availability availability) {
  // (1 - a) * 8760 h, from 1e-9 units to hundredths of an hour.
  const int128 scaled = static_cast<int128>(availability.unavailability_raw()) * 8760 * 100;
  return Fixed<2>::from_raw(static_cast<std::int64_t>(div_half_up(scaled, kOne)));
}

PathModel tier_topology(OfferTier tier) {
  switch (tier) {
    case OfferTier::aerial_only:
      return PathModel::series({PathModel::reference("aerial"), PathModel::reference("mno_backhaul")});
    case OfferTier::aerial_with_failover:
      return PathModel::series(
          {PathModel::reference("aerial"),
           PathModel::parallel({PathModel::reference("mno_backhaul"),
                                PathModel::reference("operator_backhaul")})});
    case OfferTier::complete_high_availability:
      return PathModel::series(
          {PathModel::reference("aerial"), PathModel::reference("operator_backhaul")});
  }
  throw Error(ErrorCode::validation, "unknown offer tier");
}

Availability offer_delivered_availability(OfferTier tier,
                                          const std::map<std::string, Availability>& components,
                                          const std::map<OfferTier, PathModel>& overrides) {
  const auto it = overrides.find(tier);
  const PathModel topology = it != overrides.end() ? it->second : tier_topology(tier);
  return path_availability(bind(topology, components));
}

MonteCarloEstimate simulate_availability(const PathModel& model, std::int64_t trials,
                                         std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw Error(ErrorCode::validation, "trials must be >= 1");
  if (workers == 0) workers = 1;

  const std::int64_t chunks = (trials + monte_carlo_chunk - 1) / monte_carlo_chunk;
  std::vector<std::uint64_t> chunk_seeds(static_cast<std::size_t>(chunks));
  SplitMix64 root(seed);
  for (auto& s : chunk_seeds) s = root.next();

  // Surface unbound references before spawning threads.
  (void)exact_raw(model);

  std::vector<std::int64_t> successes(workers, 0);
  auto run = [&](unsigned w) {
    for (std::int64_t c = w; c < chunks; c += workers) {
      SplitMix64 rng(chunk_seeds[static_cast<std::size_t>(c)]);
      const std::int64_t begin = c * monte_carlo_chunk;
      const std::int64_t end = std::min(trials, begin + monte_carlo_chunk);
      std::int64_t up = 0;
      for (std::int64_t t = begin; t < end; ++t) up += trial_up(model, rng) ? 1 : 0;
      successes[w] += up;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  MonteCarloEstimate est;
  est.trials = trials;
  for (auto s : successes) est.successes += s;
  est.availability = static_cast<double>(est.successes) / static_cast<double>(trials);
  const double p = est.availability;
  est.half_width = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return est;
}

}  // namespace hapecon
