#include "altsp/pla.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "altsp/errors.hpp"

namespace altsp {

KnotSet::KnotSet(std::vector<double> cuts) : cuts_(std::move(cuts)) {
    if (cuts_.size() < 2) {
        throw ConfigError("KnotSet: need at least two cut-points");
    }
    if (cuts_.front() != 0.0 || cuts_.back() != 1.0) {
        throw ConfigError("KnotSet: endpoints must be exactly 0 and 1");
    }
    for (std::size_t i = 1; i < cuts_.size(); ++i) {
        if (!(cuts_[i] > cuts_[i - 1])) {
            throw ConfigError(
                "KnotSet: cut-points must be strictly increasing (segment " +
                std::to_string(i) + " is degenerate)");
        }
    }
}

std::size_t KnotSet::segment_of(double xi) const {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw DomainError("KnotSet: stress must lie in [0,1]");
    }
    // First cut >= xi; a point on an interior knot lands in the left segment.
    const auto it = std::lower_bound(cuts_.begin() + 1, cuts_.end(), xi);
    return static_cast<std::size_t>(it - cuts_.begin());
}

LinkModel::LinkModel(KnotSet mu_knots_, PlaCoefficients mu_gamma_,
                     KnotSet sigma_knots_, PlaCoefficients sigma_gamma_)
    : mu_knots(std::move(mu_knots_)),
      mu_gamma(std::move(mu_gamma_)),
      sigma_knots(std::move(sigma_knots_)),
      sigma_gamma(std::move(sigma_gamma_)) {
    if (mu_gamma.gamma.size() != mu_knots.size()) {
        throw ConfigError("LinkModel: mu coefficient count must equal knot count");
    }
    if (sigma_gamma.gamma.size() != sigma_knots.size()) {
        throw ConfigError("LinkModel: sigma coefficient count must equal knot count");
    }
}

double pla_value(double xi, const KnotSet& knots, std::span<const double> gamma) {
    const std::size_t q = knots.segment_of(xi);
    const double lo = knots[q - 1];
    const double hi = knots[q];
    const double r = (xi - lo) / (hi - lo);
    return gamma[q - 1] + (gamma[q] - gamma[q - 1]) * r;
}

EvParams eval_link(double xi, const LinkModel& model) {
    const double mu = pla_value(xi, model.mu_knots, model.mu_gamma.gamma);
    const double ln_sigma = pla_value(xi, model.sigma_knots, model.sigma_gamma.gamma);
    return EvParams(mu, std::exp(ln_sigma));
}

std::vector<double> hat_gradients(double xi, const KnotSet& knots) {
    const std::size_t q = knots.segment_of(xi);
    const double lo = knots[q - 1];
    const double hi = knots[q];
    const double r = (xi - lo) / (hi - lo);
    std::vector<double> out(knots.size(), 0.0);
    out[q - 1] = 1.0 - r;
    out[q] = r;
    return out;
}

KnotSet default_knots(int m, int Q) {
    if (m < 1 || Q < 1) {
        throw ConfigError("default_knots: m and Q must be positive");
    }
    if (Q > m + 1) {
        throw ConfigError("default_knots: Q must not exceed m+1");
    }
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(Q) + 1);
    cuts.push_back(0.0);
    for (int j = 1; j < Q; ++j) {
        cuts.push_back(static_cast<double>(j) / (m + 1));
    }
    cuts.push_back(1.0);
    return KnotSet(std::move(cuts));
}

namespace {

// Linear-interpolated order statistic at probability p.
double empirical_quantile(std::vector<double> sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

KnotSet default_knots(std::span<const double> stresses, int Q) {
    if (Q < 1) {
        throw ConfigError("default_knots: Q must be positive");
    }
    if (static_cast<std::size_t>(Q) > stresses.size()) {
        throw ConfigError("default_knots: Q must not exceed the number of stress levels");
    }
    std::vector<double> sorted(stresses.begin(), stresses.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(Q) + 1);
    cuts.push_back(0.0);
    for (int j = 1; j < Q; ++j) {
        cuts.push_back(empirical_quantile(sorted, static_cast<double>(j) / Q));
    }
    cuts.push_back(1.0);
    return KnotSet(std::move(cuts));
}

KnotSet equispaced_knots(int Q) {
    if (Q < 1) {
        throw ConfigError("equispaced_knots: Q must be positive");
    }
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(Q) + 1);
    for (int j = 0; j <= Q; ++j) {
        cuts.push_back(static_cast<double>(j) / Q);
    }
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    return KnotSet(std::move(cuts));
}

}  // namespace altsp
