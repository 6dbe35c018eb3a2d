#pragma once

namespace cclab {

// Standard normal cdf.
double norm_cdf(double x);

// Standard normal quantile; 0 -> -inf, 1 -> +inf, outside [0,1] throws.
// Acklam's rational approximation plus one Halley refinement (~1e-15).
double norm_quantile(double p);

// P(X <= x, Y <= y) for a standard bivariate normal with correlation rho,
// |rho| < 1. Drezner-Wesolowsky/Genz hybrid, |error| < 5e-16. Infinite
// arguments are handled (-inf -> 0, +inf -> marginal cdf).
double bvn_cdf(double x, double y, double rho);

// Upper orthant P(X > x, Y > y); same algorithm.
double bvn_upper(double x, double y, double rho);

}  // namespace cclab
