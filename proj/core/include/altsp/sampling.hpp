#ifndef ALTSP_SAMPLING_HPP
#define ALTSP_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "altsp/distributions.hpp"

namespace altsp {

enum class ObsStatus { failed, censored };

/// One unit's outcome on the log-lifetime scale. Censored observations
/// carry log_time == ln(tau0) so that likelihood code works in a single
/// scale.
struct CensoredObservation {
    double log_time;
    ObsStatus status;
};

struct StressGroup {
    double stress;  // standardized, in [0, 1]
    std::vector<CensoredObservation> observations;
};

/// Type-I censored sample across stress levels. log_censor_time is the
/// authoritative censoring boundary; censor_time = exp(log_censor_time)
/// may overflow to +inf for extreme parameterizations and is kept for
/// reporting only.
struct CensoredSample {
    std::vector<StressGroup> groups;
    double censor_time = 0.0;
    double log_censor_time = 0.0;

    std::size_t total_units() const;
    std::size_t total_failures() const;
    double censored_fraction() const;

    /// Order-insensitive content fingerprint, used to detect model
    /// comparisons across mismatched samples.
    std::uint64_t fingerprint() const;
};

/// Simulation input: one stress level with its Weibull lifetime law and
/// group size.
struct StressCell {
    double stress;
    WeibullParams weibull;
    int count;
};

/// Draws Weibull lifetimes per level by the inverse-cdf transform
/// x = (-ln U)^(1/alpha) / lambda (computed on the log scale so that
/// extreme locations cannot overflow) and censors at tau0.
/// Deterministic for the given seed.
CensoredSample simulate_censored(std::span<const StressCell> cells,
                                 double tau0, std::uint64_t seed);

/// Same, with the censoring boundary given directly as ln(tau0).
CensoredSample simulate_censored_log(std::span<const StressCell> cells,
                                     double log_tau0, std::uint64_t seed);

}  // namespace altsp

#endif  // ALTSP_SAMPLING_HPP
