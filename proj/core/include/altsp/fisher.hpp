#ifndef ALTSP_FISHER_HPP
#define ALTSP_FISHER_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "altsp/pla.hpp"

namespace altsp {

/// A sampling-plan evaluation point: stress levels with fixed endpoints
/// 0 and 1, allocation proportions summing to 1, a relaxed (real-valued)
/// total sample size, and the censoring time.
struct DesignPoint {
    std::vector<double> stresses;     // xi_0 = 0 < ... < xi_m = 1
    std::vector<double> proportions;  // pi_0..pi_m, sum to 1
    double n = 1.0;
    double tau0 = 1.0;

    /// Throws DomainError on any violated invariant.
    void validate() const;
};

/// F(theta)^-1 partitioned by the (gamma_mu, gamma_sigma) ordering.
struct CovarianceBlocks {
    Eigen::MatrixXd h11;  // (Q1+1) x (Q1+1)
    Eigen::MatrixXd h12;  // (Q1+1) x (Q2+1)
    Eigen::MatrixXd h22;  // (Q2+1) x (Q2+1)
};

struct FisherResult {
    Eigen::MatrixXd fisher;  // (Q1+Q2+2)^2, symmetric PSD
    CovarianceBlocks blocks;
    double condition_number = 0.0;
};

/// Per-unit Fisher information contribution of one stress level under
/// Type-I censoring at tau0: the expectation of the outer product of
/// the log-hazard gradient over log-lifetimes below ln(tau0). Computed
/// by adaptive quadrature after the substitution w = e^((t-mu)/sigma),
/// which turns the integrals into incomplete-gamma-type forms.
Eigen::MatrixXd unit_fisher(double xi, const LinkModel& model, double tau0);

/// As unit_fisher, with the censoring boundary given as ln(tau0).
Eigen::MatrixXd unit_fisher_log(double xi, const LinkModel& model,
                                double log_tau0);

/// F = n * sum_i pi_i * unit_fisher(xi_i), inverted and partitioned.
/// Throws SingularMatrixError (naming the deficient directions) when the
/// matrix is singular or its condition number exceeds 1e12.
FisherResult fisher_and_covariance(const DesignPoint& design,
                                   const LinkModel& model);

struct McFisherResult {
    Eigen::MatrixXd estimate;
    Eigen::MatrixXd std_error;  // per-entry Monte Carlo standard error
};

/// Monte Carlo estimate of the same integrand as unit_fisher: the mean
/// over EV draws of the indicator-weighted gradient outer product.
McFisherResult mc_fisher_oracle(double xi, const LinkModel& model, double tau0,
                                int reps, std::uint64_t seed);

}  // namespace altsp

#endif  // ALTSP_FISHER_HPP
