#include "altsp/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "altsp/errors.hpp"

namespace altsp {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
    if (a == b) return 0.0;
    boost::math::quadrature::tanh_sinh<double> integrator(15);
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(f, a, b, rel_tol, &error, &l1);
    // The error estimate is relative to the L1 norm of the integrand.
    const double scale = std::max(l1, 1e-300);
    if (!std::isfinite(value) || error / scale > 1e3 * rel_tol) {
        std::ostringstream msg;
        msg << "quadrature failed on [" << a << ", " << b
            << "]: value=" << value << " est_rel_error=" << error / scale;
        throw NumericalError(msg.str());
    }
    return value;
}

}  // namespace altsp
