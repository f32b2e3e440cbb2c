#include "rankcorr/samplers.hpp"

#include <cmath>
#include <string>

namespace rankcorr {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidConfig, message);
}

void require_rho(double rho) {
  require(std::isfinite(rho) && rho >= -1.0 && rho <= 1.0, "rho must lie in [-1, 1], got " + std::to_string(rho));
}

}  // namespace

void validate_model(const BivariateModel& model) {
  if (const auto* m = std::get_if<NormalModel>(&model)) {
    require(std::isfinite(m->mu1) && std::isfinite(m->mu2), "normal means must be finite");
    require(m->sigma1 > 0.0 && m->sigma2 > 0.0 && std::isfinite(m->sigma1) && std::isfinite(m->sigma2),
            "normal scales must be positive");
    require_rho(m->rho);
  } else {
    const auto& f = std::get<FgmExponentialModel>(model);
    require(f.theta1 > 0.0 && f.theta2 > 0.0 && std::isfinite(f.theta1) && std::isfinite(f.theta2),
            "exponential scales must be positive");
    require_rho(f.rho);
  }
}

PairedSample<double> sample_bivariate_normal(const NormalModel& model, Index n, RngStream& rng) {
  validate_model(model);
  const double loading = std::sqrt(1.0 - model.rho * model.rho);
  Vector<double> xs(n), ys(n);
  for (Index i = 0; i < n; ++i) {
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    xs(i) = model.mu1 + model.sigma1 * z1;
    ys(i) = model.mu2 + model.sigma2 * (model.rho * z1 + loading * z2);
  }
  return validate_sample(xs, ys);
}

double fgm_conditional_quantile(double rho, double u, double w) {
  const double a = rho * (1.0 - 2.0 * u);
  // Smaller root of a v^2 - (1 + a) v + w = 0, rationalized so a -> 0 gives v = w.
  const double b = 1.0 + a;
  return 2.0 * w / (b + std::sqrt(b * b - 4.0 * a * w));
}

PairedSample<double> sample_fgm_exponential(const FgmExponentialModel& model, Index n, RngStream& rng) {
  validate_model(model);
  Vector<double> xs(n), ys(n);
  for (Index i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const double w = rng.uniform();
    const double v = fgm_conditional_quantile(model.rho, u, w);
    xs(i) = -model.theta1 * std::log1p(-u);
    ys(i) = -model.theta2 * std::log1p(-v);
  }
  return validate_sample(xs, ys);
}

PairedSample<double> sample(const BivariateModel& model, Index n, RngStream& rng) {
  return std::visit(
      [&](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, NormalModel>) {
          return sample_bivariate_normal(m, n, rng);
        } else {
          return sample_fgm_exponential(m, n, rng);
        }
      },
      model);
}

double fgm_exponential_cdf(const FgmExponentialModel& model, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  const double f1 = -std::expm1(-x / model.theta1);
  const double f2 = -std::expm1(-y / model.theta2);
  return f1 * f2 * (1.0 + model.rho * (1.0 - f1) * (1.0 - f2));
}

}  // namespace rankcorr
