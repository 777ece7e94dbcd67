#include "fracrank/chisq.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <stdexcept>

namespace fracrank {

namespace {
const boost::math::chi_squared_distribution<double> kChi1(1.0);
}

double chi2_1_upper_tail(double x) {
    if (x < 0.0) throw std::invalid_argument("chi2_1_upper_tail: negative statistic");
    return boost::math::cdf(boost::math::complement(kChi1, x));
}

double chi2_1_critical_value(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("chi2_1_critical_value: level must be in (0,1)");
    return boost::math::quantile(kChi1, 1.0 - alpha);
}

}  // namespace fracrank
