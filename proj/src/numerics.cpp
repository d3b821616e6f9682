#include "logspiral/numerics.hpp"

#include "logspiral/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace logspiral::numerics {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    if (a == b)
        return 0.0;
    if (b < a)
        return -integrate(f, b, a, rel_tol);
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 20, rel_tol, &error, &l1);
    if (!std::isfinite(value))
        raise(ErrorKind::NumericalBreakdown, "quadrature produced a non-finite value");
    // The error estimate is absolute; compare against the L1 norm of the integrand.
    if (error > 100.0 * rel_tol * std::max(l1, std::numeric_limits<double>::min()))
        raise(ErrorKind::NumericalBreakdown, "quadrature did not reach the requested tolerance");
    return value;
}

} // namespace logspiral::numerics
