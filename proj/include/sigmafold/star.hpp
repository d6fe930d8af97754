#pragma once

#include <array>

#include "sigmafold/vec3.hpp"

namespace sigma {

// Radii of the four star vectors and the fold invariant
// lambda = sin(alpha) * sin(beta), which is also cos(gamma) for the acute
// facet angle gamma.
struct StarParams {
  std::array<double, 4> r{1.0, 1.0, 1.0, 1.0};
  double lambda = 1.0 / 3.0;

  // Throws DomainError unless every r > 0 and 0 < lambda < 1.
  void validate() const;

  friend bool operator==(const StarParams&, const StarParams&) = default;
};

// A point on the fold path. beta is never stored; it is recovered from
// lambda and alpha so that the congruence constraint holds by construction.
class StarState {
 public:
  // alpha must lie in [asin(lambda), pi/2]; both endpoints are the collapsed
  // states and are accepted.
  StarState(const StarParams& params, double alpha);

  // Fold parameter chart: t = 0 collapses into the plane y = 0, t = 1 into
  // the plane x = 0.
  static StarState at(const StarParams& params, double t);

  const StarParams& params() const { return params_; }
  double lambda() const { return params_.lambda; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  // True at either end of the fold path.
  bool degenerate() const;

  std::array<Vec3, 4> vectors() const;

 private:
  StarParams params_;
  double alpha_;
  double beta_;
};

double alpha_min(double lambda);
double beta_of_alpha(double lambda, double alpha);
double alpha_of_t(double lambda, double t);
// Inverse of alpha_of_t on the legal interval.
double t_of_alpha(double lambda, double alpha);
double facet_angle_gamma(double lambda);

std::array<Vec3, 4> star_vectors(const StarState& state);

// Unit radii with alpha = beta = arccos(sqrt(2/3)); lambda = 1/3.
StarState tetrahedral_star();

}  // namespace sigma
