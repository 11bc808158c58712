#include "hapecon/domain.hpp"

#include <algorithm>

#include "hapecon/error.hpp"

namespace hapecon {

const NamedArchitecture& Scenario::architecture(const std::string& id) const {
  const auto it = std::find_if(architectures.begin(), architectures.end(),
                               [&](const NamedArchitecture& a) { return a.id == id; });
  if (it == architectures.end()) throw Error(ErrorCode::unknown_reference, "architecture '" + id + "'");
  return *it;
}

std::string_view to_string(PlatformKind kind) {
  switch (kind) {
    case PlatformKind::unmanned_solar_plane: return "unmanned_solar_plane";
    case PlatformKind::unmanned_airship: return "unmanned_airship";
  }
  return "";
}

std::string_view to_string(CostPhase phase) {
  switch (phase) {
    case CostPhase::capex: return "capex";
    case CostPhase::opex_annual: return "opex_annual";
  }
  return "";
}

std::string_view to_string(SiteClass site_class) {
  switch (site_class) {
    case SiteClass::cell_site: return "cell_site";
    case SiteClass::aggregation_site: return "aggregation_site";
    case SiteClass::platform: return "platform";
    case SiteClass::backbone_fee: return "backbone_fee";
    case SiteClass::space_segment_lease: return "space_segment_lease";
  }
  return "";
}

std::string_view to_string(OfferTier tier) {
  switch (tier) {
    case OfferTier::aerial_only: return "aerial_only";
    case OfferTier::aerial_with_failover: return "aerial_with_failover";
    case OfferTier::complete_high_availability: return "complete_high_availability";
  }
  return "";
}

std::string_view architecture_kind(const ArchitectureConfig& config) {
  switch (config.index()) {
    case 0: return "satellite";
    case 1: return "hap_direct";
    default: return "integrated";
  }
}

}  // namespace hapecon
