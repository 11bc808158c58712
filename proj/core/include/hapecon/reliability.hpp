#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hapecon/fixed.hpp"
#include "hapecon/units.hpp"

namespace hapecon {

enum class OfferTier;

/// Reliability block diagram: leaves composed in series or in parallel.
/// A reference leaf names a component whose availability is bound later.
class PathModel {
 public:
  enum class Kind { leaf, reference, series, parallel };

  PathModel() = default;

  static PathModel leaf(std::string label, Availability availability);
  static PathModel reference(std::string label);
  static PathModel series(std::vector<PathModel> children);
  static PathModel parallel(std::vector<PathModel> children);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  Availability availability() const { return availability_; }
  const std::vector<PathModel>& children() const { return children_; }

  std::size_t leaf_count() const;

  bool operator==(const PathModel&) const = default;

 private:
  Kind kind_ = Kind::leaf;
  std::string label_;
  Availability availability_;
  std::vector<PathModel> children_;
};

/// Replaces every reference leaf with the named component's availability.
/// Throws MISSING_PARAMETER naming the first absent component.
PathModel bind(const PathModel& model, const std::map<std::string, Availability>& components);

/// Availability at the full internal precision (9 digits), rounded at each
/// composition step. Throws MISSING_PARAMETER on unbound references.
Availability exact_path_availability(const PathModel& model);

/// Reported availability: exact value rounded half-up to 6 digits. A value
/// that would round to 1 keeps its 9-digit form.
Availability path_availability(const PathModel& model);

/// Expected downtime in hours per 8760-hour year, 2 fractional digits.
Fixed<2> downtime_per_year(Availability availability);

/// Canonical topology of an offer tier, in terms of the component labels
/// "aerial", "mno_backhaul" and "operator_backhaul".
PathModel tier_topology(OfferTier tier);

Availability offer_delivered_availability(
    OfferTier tier, const std::map<std::string, Availability>& components,
    const std::map<OfferTier, PathModel>& overrides = {});

/// SplitMix64 (Steele, Lea, Flood 2014): the reference 64-bit generator
/// for every Monte Carlo run.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct MonteCarloEstimate {
  double availability = 0.0;
  /// Half-width of the normal-approximation 95% confidence interval.
  double half_width = 0.0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
};

/// Trials are cut into chunks of `monte_carlo_chunk` trials; chunk k draws
/// from a SplitMix64 seeded with the k-th output of SplitMix64(seed). Each
/// trial draws one uniform per leaf in depth-first order and the leaf is up
/// when the draw is below its availability. The result does not depend on
/// `workers`.
MonteCarloEstimate simulate_availability(const PathModel& model, std::int64_t trials,
                                         std::uint64_t seed, unsigned workers = 1);

inline constexpr std::int64_t monte_carlo_chunk = 1 << 16;

}  // namespace hapecon
