#include "altsp/distributions.hpp"

#include <cmath>

#include "altsp/errors.hpp"
#include "altsp/special.hpp"

namespace altsp {

WeibullParams::WeibullParams(double shape_, double scale_)
    : shape(shape_), scale(scale_) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw DomainError("WeibullParams: shape must be finite and > 0");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("WeibullParams: scale must be finite and > 0");
    }
}

EvParams::EvParams(double location_, double scale_)
    : location(location_), scale(scale_) {
    if (!std::isfinite(location)) {
        throw DomainError("EvParams: location must be finite");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("EvParams: scale must be finite and > 0");
    }
}

WeibullMeasures weibull_measures(double x, const WeibullParams& p) {
    if (!(x >= 0.0)) {
        throw DomainError("weibull_measures: x must be >= 0");
    }
    const double lx = p.scale * x;
    const double u = std::pow(lx, p.shape);
    const double cdf = -std::expm1(-u);
    const double pdf =
        p.shape * p.scale * std::pow(lx, p.shape - 1.0) * std::exp(-u);
    return {pdf, cdf};
}

EvMeasures ev_measures(double t, const EvParams& p) {
    const double z = (t - p.location) / p.scale;
    const double ez = std::exp(z);
    const double cdf = -std::expm1(-ez);
    const double pdf = std::exp(z - ez) / p.scale;
    const double hazard = ez / p.scale;
    return {pdf, cdf, hazard};
}

EvParams weibull_to_ev(const WeibullParams& p) {
    return EvParams(-std::log(p.scale), 1.0 / p.shape);
}

WeibullParams ev_to_weibull(const EvParams& p) {
    return WeibullParams(1.0 / p.scale, std::exp(-p.location));
}

LogLifetimeMoments log_lifetime_moments(const EvParams& p) {
    return {p.location - p.scale * kEulerGamma,
            p.scale * p.scale * kPiSqOver6};
}

}  // namespace altsp
