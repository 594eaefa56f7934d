#ifndef ALTSP_DISTRIBUTIONS_HPP
#define ALTSP_DISTRIBUTIONS_HPP

namespace altsp {

/// Weibull lifetime parameters. The scale is a rate (inverse time):
/// cdf(x) = 1 - exp(-(scale * x)^shape).
struct WeibullParams {
    double shape;  // alpha > 0
    double scale;  // lambda > 0

    WeibullParams(double shape_, double scale_);
};

/// Location-scale extreme-value parameters of the log-lifetime,
/// cdf(t) = 1 - exp(-e^((t - location)/scale)).
struct EvParams {
    double location;  // mu, log-time units
    double scale;     // sigma > 0

    EvParams(double location_, double scale_);
};

struct WeibullMeasures {
    double pdf;
    double cdf;
};

struct EvMeasures {
    double pdf;
    double cdf;
    double hazard;
};

struct LogLifetimeMoments {
    double mean;
    double variance;
};

/// pdf and cdf of the Weibull lifetime at x >= 0.
WeibullMeasures weibull_measures(double x, const WeibullParams& p);

/// pdf, cdf and hazard of the EV log-lifetime at t.
EvMeasures ev_measures(double t, const EvParams& p);

/// Log-transform correspondence: mu = -ln(lambda), sigma = 1/alpha.
EvParams weibull_to_ev(const WeibullParams& p);

/// Inverse of weibull_to_ev.
WeibullParams ev_to_weibull(const EvParams& p);

/// Mean mu - sigma*gamma and variance sigma^2 * pi^2/6 of the EV
/// log-lifetime.
LogLifetimeMoments log_lifetime_moments(const EvParams& p);

}  // namespace altsp

#endif  // ALTSP_DISTRIBUTIONS_HPP
