#pragma once

#include <string>
#include <string_view>

#include "driftrec/image.hpp"
#include "driftrec/spline.hpp"

namespace driftrec {

/// Drift shape F(t) of the forward SDE dx = gamma F(t) (y - x) dt + g(t) dw.
enum class SdeKind { OUVE, TSDVE, CosVE };

std::string_view to_string(SdeKind kind);
SdeKind parse_sde_kind(std::string_view name);

/// Raw process parameters. `nu` is the diffusion normalization; a freshly
/// written parameter set carries the placeholder nu = 1.
struct SdeParams {
  SdeKind kind = SdeKind::OUVE;
  double gamma = 1.0;
  double sigma_min = 0.01;
  double sigma_max = 1.0;
  double t_eps = 0.03;
  double T = 1.0;
  double nu = 1.0;

  /// Throws ConfigError on invalid combinations.
  void validate() const;
};

/// Reference parameter sets for the three processes (gamma = 1 / 2 / 1,
/// sigma in [0.01, 1], t_eps = 0.03), with the placeholder nu = 1.
SdeParams reference_params(SdeKind kind);

/// F(t).
double drift_shape(SdeKind kind, double t);
/// Integral of F over [0, t].
double drift_shape_integral(SdeKind kind, double t);
/// Weight w(t) = exp(-gamma * int_0^t F) of x0 in the forward mean.
double mean_weight(const SdeParams& p, double t);
/// g(t) = nu * (sigma_max / sigma_min)^(2t).
double diffusion(const SdeParams& p, double t);

/// OUVE variance from the integrating-factor solution of
/// d(sigma^2)/dt = -2 gamma sigma^2 + g(t)^2, sigma^2(0) = 0. Valid for t >= 0.
double ouve_closed_form_variance(const SdeParams& p, double t);

/// sigma^2(t) = int_0^t exp(-2 gamma (Phi(t) - Phi(s))) g(s)^2 ds by adaptive
/// Gauss-Kronrod quadrature. Any kind, t >= 0. Throws NumericalError when the
/// error estimate misses tolerance.
double integrated_variance(const SdeParams& p, double t);

/// Tabulated sigma^2 on 1000 equidistant times in [t_eps, T] with a natural
/// cubic spline between them.
class VarianceInterpolator {
 public:
  static constexpr std::size_t kGridSize = 1000;

  VarianceInterpolator() = default;
  explicit VarianceInterpolator(NaturalCubicSpline spline) : spline_(std::move(spline)) {}

  double operator()(double t) const { return spline_(t); }
  std::span<const double> grid() const noexcept { return spline_.knots(); }
  std::span<const double> values() const noexcept { return spline_.values(); }
  bool empty() const noexcept { return spline_.knots().empty(); }

 private:
  NaturalCubicSpline spline_;
};

VarianceInterpolator build_variance_interpolator(const SdeParams& p);

/// Variance at T for the given parameters (closed form for OUVE, quadrature otherwise).
double terminal_variance(const SdeParams& p);

/// Returns `p` with nu rescaled so that std(T) == sigma_max. sigma^2 scales
/// with nu^2, so nu_new = nu * sigma_max / std_T(nu).
SdeParams normalize_nu(const SdeParams& p);

/// Immutable, normalized process: the parameters plus the tabulated variance.
class SdeConfig {
 public:
  /// Validates `raw`, normalizes nu and tabulates the variance.
  explicit SdeConfig(const SdeParams& raw);

  const SdeParams& params() const noexcept { return params_; }
  SdeKind kind() const noexcept { return params_.kind; }
  double t_eps() const noexcept { return params_.t_eps; }
  double T() const noexcept { return params_.T; }
  double nu() const noexcept { return params_.nu; }
  const VarianceInterpolator& variance_table() const noexcept { return table_; }

  double diffusion(double t) const;
  double mean_weight(double t) const;
  /// sigma^2(t) for t in [t_eps, T]; OUVE uses the closed form, the other kinds the table.
  double variance(double t) const;
  double std(double t) const;

  /// gamma F(t) (y - x_t)
  ImageField drift(const ImageField& x_t, const ImageField& y, double t) const;
  /// w(t) x0 + (1 - w(t)) y
  ImageField mean(const ImageField& x0, const ImageField& y, double t) const;

 private:
  void require_process_time(double t, const char* what) const;
  void require_sampling_time(double t, const char* what) const;

  SdeParams params_;
  VarianceInterpolator table_;
};

}  // namespace driftrec
