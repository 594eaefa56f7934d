#ifndef ALTSP_QUADRATURE_HPP
#define ALTSP_QUADRATURE_HPP

#include <functional>

namespace altsp {

/// Adaptive quadrature of f on the open interval (a, b), tolerant of
/// integrable endpoint singularities. Throws NumericalError when the
/// requested relative tolerance cannot be certified.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10);

}  // namespace altsp

#endif  // ALTSP_QUADRATURE_HPP
