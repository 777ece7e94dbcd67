#pragma once

namespace fracrank {

/// P(chi-squared_1 > x), the upper tail used for X* p-values.
double chi2_1_upper_tail(double x);

/// The (1 - alpha) quantile of chi-squared_1, e.g. 3.8415 at alpha = 0.05.
double chi2_1_critical_value(double alpha);

}  // namespace fracrank
