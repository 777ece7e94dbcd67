#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fracrank {

/// ARFIMA(p, d, q) specification with Gaussian innovations.
///
/// Polynomial conventions: Phi(L) = 1 - phi_1 L - ... - phi_p L^p and
/// theta(L) = 1 + theta_1 L + ... + theta_q L^q, so the short-memory part is
///   u_t = phi_1 u_{t-1} + ... + eps_t + theta_1 eps_{t-1} + ...
/// Both polynomials must have all roots outside the unit circle; this is
/// checked at construction.
struct ArfimaSpec {
    ArfimaSpec(double d, std::vector<double> ar, std::vector<double> ma, double sigma);

    double d;
    std::vector<double> ar;
    std::vector<double> ma;
    double sigma;
};

/// Simulates T observations of the spec: seeded Gaussian innovations through
/// the ARMA recursion (zero pre-sample), then type-II fractional cumulation
/// of order d. Deterministic given (T, spec, seed).
std::vector<double> simulate_arfima(std::size_t T, const ArfimaSpec& spec,
                                    std::uint64_t seed);

}  // namespace fracrank
