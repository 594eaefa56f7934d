#ifndef ALTSP_PLA_HPP
#define ALTSP_PLA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "altsp/distributions.hpp"

namespace altsp {

/// Strictly increasing cut-points on [0,1] with fixed endpoints 0 and 1.
/// A set of Q+1 cuts defines Q linear segments.
class KnotSet {
public:
    explicit KnotSet(std::vector<double> cuts);

    std::size_t size() const { return cuts_.size(); }           // Q+1
    std::size_t segment_count() const { return cuts_.size() - 1; }  // Q
    double operator[](std::size_t i) const { return cuts_[i]; }
    const std::vector<double>& cuts() const { return cuts_; }

    /// 1-based index q of the segment [cut[q-1], cut[q]] containing xi.
    /// A point exactly on an interior knot belongs to the left segment.
    std::size_t segment_of(double xi) const;

private:
    std::vector<double> cuts_;
};

/// Per-knot values of a piecewise linear function; gamma[q] is the
/// function value at cut q.
struct PlaCoefficients {
    std::vector<double> gamma;
};

/// Piecewise-linear links from standardized stress to the EV location
/// (direct) and scale (through exp, so sigma(xi) > 0 automatically).
struct LinkModel {
    KnotSet mu_knots;
    PlaCoefficients mu_gamma;
    KnotSet sigma_knots;
    PlaCoefficients sigma_gamma;

    LinkModel(KnotSet mu_knots_, PlaCoefficients mu_gamma_,
              KnotSet sigma_knots_, PlaCoefficients sigma_gamma_);

    std::size_t parameter_count() const {
        return mu_gamma.gamma.size() + sigma_gamma.gamma.size();
    }
};

/// Evaluates mu(xi) and sigma(xi) = exp(pl value). Throws DomainError
/// for xi outside [0,1].
EvParams eval_link(double xi, const LinkModel& model);

/// Piecewise-linear value at xi for one knot set / coefficient pair.
double pla_value(double xi, const KnotSet& knots, std::span<const double> gamma);

/// Gradient of the PL value with respect to the per-knot coefficients:
/// the hat (tent) basis evaluated at xi. Components are nonnegative and
/// sum to 1.
std::vector<double> hat_gradients(double xi, const KnotSet& knots);

/// Paper-default cut-points {0, 1/(m+1), ..., (Q-1)/(m+1), 1} for m+1
/// stress levels. Requires 1 <= Q <= m+1.
KnotSet default_knots(int m, int Q);

/// Cut-points at empirical quantiles j/Q of observed stresses,
/// j = 1..Q-1 (linear-interpolated order statistics).
KnotSet default_knots(std::span<const double> stresses, int Q);

/// Equispaced cut-points {0, 1/Q, ..., 1}.
KnotSet equispaced_knots(int Q);

}  // namespace altsp

#endif  // ALTSP_PLA_HPP
