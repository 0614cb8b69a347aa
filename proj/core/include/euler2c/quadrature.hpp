#ifndef EULER2C_QUADRATURE_HPP
#define EULER2C_QUADRATURE_HPP

#include <functional>

namespace euler2c {

/// Adaptive Gauss-Kronrod 7-15 quadrature of a smooth integrand over [a, b].
/// Panels are bisected until the local Kronrod/Gauss discrepancy falls below
/// tol scaled to the panel; intended accuracy ~1e-12 relative.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12);

}  // namespace euler2c

#endif
