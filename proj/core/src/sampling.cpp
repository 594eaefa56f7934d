#include "altsp/sampling.hpp"

#include <bit>
#include <cmath>

#include "altsp/errors.hpp"
#include "altsp/rng.hpp"

namespace altsp {

std::size_t CensoredSample::total_units() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.observations.size();
    return n;
}

std::size_t CensoredSample::total_failures() const {
    std::size_t d = 0;
    for (const auto& g : groups) {
        for (const auto& o : g.observations) {
            if (o.status == ObsStatus::failed) ++d;
        }
    }
    return d;
}

double CensoredSample::censored_fraction() const {
    const std::size_t n = total_units();
    if (n == 0) return 0.0;
    return 1.0 - static_cast<double>(total_failures()) / static_cast<double>(n);
}

std::uint64_t CensoredSample::fingerprint() const {
    std::uint64_t h = splitmix64(std::bit_cast<std::uint64_t>(log_censor_time));
    for (const auto& g : groups) {
        h = splitmix64(h ^ std::bit_cast<std::uint64_t>(g.stress));
        for (const auto& o : g.observations) {
            h = splitmix64(h ^ std::bit_cast<std::uint64_t>(o.log_time));
            h = splitmix64(h + (o.status == ObsStatus::failed ? 1u : 2u));
        }
    }
    return h;
}

CensoredSample simulate_censored_log(std::span<const StressCell> cells,
                                     double log_tau0, std::uint64_t seed) {
    if (cells.empty()) {
        throw DomainError("simulate_censored: empty stress-level list");
    }
    if (!std::isfinite(log_tau0)) {
        throw DomainError("simulate_censored: ln(tau0) must be finite");
    }
    for (const auto& c : cells) {
        if (c.count < 1) {
            throw DomainError("simulate_censored: group sizes must be >= 1");
        }
        if (!(c.stress >= 0.0 && c.stress <= 1.0)) {
            throw DomainError("simulate_censored: stress must lie in [0,1]");
        }
    }

    Rng rng(seed);
    CensoredSample sample;
    sample.log_censor_time = log_tau0;
    sample.censor_time = std::exp(log_tau0);
    sample.groups.reserve(cells.size());
    for (const auto& c : cells) {
        const EvParams ev = weibull_to_ev(c.weibull);
        StressGroup group;
        group.stress = c.stress;
        group.observations.reserve(static_cast<std::size_t>(c.count));
        for (int j = 0; j < c.count; ++j) {
            // ln x = mu + sigma * ln(-ln U), the log of the inverse-cdf draw.
            const double t = ev.location + ev.scale * rng.sev();
            if (t <= log_tau0) {
                group.observations.push_back({t, ObsStatus::failed});
            } else {
                group.observations.push_back({log_tau0, ObsStatus::censored});
            }
        }
        sample.groups.push_back(std::move(group));
    }
    return sample;
}

CensoredSample simulate_censored(std::span<const StressCell> cells,
                                 double tau0, std::uint64_t seed) {
    if (!(tau0 > 0.0)) {
        throw DomainError("simulate_censored: tau0 must be > 0");
    }
    return simulate_censored_log(cells, std::log(tau0), seed);
}

}  // namespace altsp
