#pragma once

#include <variant>

#include "rankcorr/random.hpp"
#include "rankcorr/sample.hpp"

namespace rankcorr {

struct NormalModel {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double rho = 0.0;
};

/// Farlie-Gumbel-Morgenstern copula with exponential marginals of scale
/// theta1, theta2: F(x,y) = F1 F2 [1 + rho (1 - F1)(1 - F2)].
struct FgmExponentialModel {
  double theta1 = 1.0;
  double theta2 = 1.0;
  double rho = 0.0;
};

using BivariateModel = std::variant<NormalModel, FgmExponentialModel>;

/// Throws InvalidConfig if scales are not positive or rho is outside [-1, 1].
void validate_model(const BivariateModel& model);

/// Cholesky construction: X = mu1 + sigma1 Z1, Y = mu2 + sigma2 (rho Z1 + sqrt(1-rho^2) Z2).
PairedSample<double> sample_bivariate_normal(const NormalModel& model, Index n, RngStream& rng);

/// Conditional inversion on the copula: U uniform, then V solves
/// v [1 + A (1 - v)] = W with A = rho (1 - 2U); exponential quantiles map to X, Y.
PairedSample<double> sample_fgm_exponential(const FgmExponentialModel& model, Index n, RngStream& rng);

PairedSample<double> sample(const BivariateModel& model, Index n, RngStream& rng);

/// Joint CDF of the FGM-exponential model, evaluated directly.
double fgm_exponential_cdf(const FgmExponentialModel& model, double x, double y);

/// Inverse of the conditional copula CDF C(v | u) = v [1 + A (1 - v)], A = rho (1 - 2u).
double fgm_conditional_quantile(double rho, double u, double w);

}  // namespace rankcorr
