#include "sigmafold/star.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sigmafold/error.hpp"

namespace sigma {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("lambda must lie in (0,1), got " + std::to_string(lambda));
  }
}

// Endpoint evaluation can push lambda / sin(alpha) a few ulps past 1.
double clamped_asin(double x) { return std::asin(std::fmin(1.0, std::fmax(-1.0, x))); }

}  // namespace

void StarParams::validate() const {
  for (double ri : r) {
    if (!(ri > 0.0) || !std::isfinite(ri)) {
      throw DomainError("star radii must be positive and finite");
    }
  }
  check_lambda(lambda);
}

double alpha_min(double lambda) {
  check_lambda(lambda);
  return std::asin(lambda);
}

double beta_of_alpha(double lambda, double alpha) {
  const double lo = alpha_min(lambda);
  // A few ulps of slack so that alpha_of_t(0) and alpha_of_t(1) are legal.
  constexpr double slack = 1e-14;
  if (!(alpha >= lo - slack && alpha <= kHalfPi + slack)) {
    throw DomainError("alpha outside [asin(lambda), pi/2]: " + std::to_string(alpha));
  }
  if (alpha <= lo) return kHalfPi;
  return clamped_asin(lambda / std::sin(alpha));
}

double alpha_of_t(double lambda, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("fold parameter t must lie in [0,1], got " + std::to_string(t));
  }
  const double lo = alpha_min(lambda);
  if (t == 1.0) return kHalfPi;
  return lo + t * (kHalfPi - lo);
}

double t_of_alpha(double lambda, double alpha) {
  const double lo = alpha_min(lambda);
  beta_of_alpha(lambda, alpha);
  return (alpha - lo) / (kHalfPi - lo);
}

double facet_angle_gamma(double lambda) {
  check_lambda(lambda);
  return std::acos(lambda);
}

StarState::StarState(const StarParams& params, double alpha)
    : params_(params), alpha_(alpha), beta_(0.0) {
  params_.validate();
  beta_ = beta_of_alpha(params_.lambda, alpha);
}

StarState StarState::at(const StarParams& params, double t) {
  params.validate();
  return StarState(params, alpha_of_t(params.lambda, t));
}

bool StarState::degenerate() const {
  constexpr double eps = 1e-14;
  return alpha_ >= kHalfPi - eps || beta_ >= kHalfPi - eps;
}

std::array<Vec3, 4> StarState::vectors() const {
  const auto& r = params_.r;
  // cos(pi/2) is 6e-17 in floating point; the collapsed states are exact.
  const double ca = alpha_ == kHalfPi ? 0.0 : std::cos(alpha_), sa = std::sin(alpha_);
  const double cb = beta_ == kHalfPi ? 0.0 : std::cos(beta_), sb = std::sin(beta_);
  return {Vec3{r[0] * ca, 0.0, r[0] * sa}, Vec3{-r[1] * ca, 0.0, r[1] * sa},
          Vec3{0.0, r[2] * cb, -r[2] * sb}, Vec3{0.0, -r[3] * cb, -r[3] * sb}};
}

std::array<Vec3, 4> star_vectors(const StarState& state) { return state.vectors(); }

StarState tetrahedral_star() {
  const double alpha = std::acos(std::sqrt(2.0 / 3.0));
  StarParams params;
  params.r = {1.0, 1.0, 1.0, 1.0};
  params.lambda = std::sin(alpha) * std::sin(alpha);
  return StarState(params, alpha);
}

}  // namespace sigma
