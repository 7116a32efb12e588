#pragma once
// Closed-form evaluators for the two limit theorems: the long-time return
// probability at the origin and the rescaled (X_t/t, Y_t/t) convergence law
// (point mass at the origin plus a continuous density on an ellipse), along
// with the lattice Green-function style integrals behind the asymptotic
// amplitude stencils.

#include <Eigen/Dense>

#include "qwalk/core.hpp"

namespace qwalk {

struct GTriple {
  double g1, g2, g3;
};

/// Maps theta in (0,2pi)\{pi} onto the (0,pi) branch used by the g
/// functions; rejects 0, pi and values outside [0,2pi).
double fold_theta(double theta);

/// The three coefficient functions on theta in (0,pi), strict.
/// g3 = s/pi; g1 and g2 are the arctan-free reductions of the corresponding
/// zone integrals.
GTriple g_functions(double theta);

/// lim_{t->inf} P_t(0,0).  Accepts theta in (0,2pi)\{pi} (folds internally).
double return_probability_limit(double theta, const InitialCoinState& initial);

/// Weight of the point mass at the origin in the rescaled limit law.
double delta_coefficient(double theta, const InitialCoinState& initial);

/// Quadratic form entering the continuous part of the limit density.
double xi(double x, double y, const InitialCoinState& initial,
          const CoinParameter& coin);

/// Strict membership in the support ellipse
/// (x+y)^2 / 2(1+c) + (x-y)^2 / 2(1-c) < 1.
bool in_support(double x, double y, const CoinParameter& coin);

/// xi / (2 pi^2 (1-x^2)(1-y^2)) on the ellipse, 0 outside.
double continuous_density(double x, double y, const InitialCoinState& initial,
                          const CoinParameter& coin);

struct FResult {
  double value;
  double error_estimate;
  bool converged;
};

// The raw defining integral of F diverges logarithmically at the zone
// center, in both representations; every amplitude formula combines F values
// with coefficients summing to zero, so only differences are observable.
// Both routines therefore return the origin-subtracted value
// F(x,y) - F(0,0), which is finite, representation-independent and keeps all
// downstream formulas unchanged.  F(0,0) == 0 by construction.

/// Origin-subtracted F via the 2D zone integral.
FResult f_double(int x, int y, const CoinParameter& coin,
                 double abs_tol = 1e-9);

/// Origin-subtracted F via the single-k residue representation.
FResult f_single(int x, int y, const CoinParameter& coin,
                 double abs_tol = 1e-12);

/// t -> infinity amplitude at (x,y): the six/seven-point F stencils.
Eigen::Vector3cd asymptotic_amplitude(int x, int y,
                                      const InitialCoinState& initial,
                                      const CoinParameter& coin);

/// t -> infinity amplitude at the origin in g-function form; its squared
/// norm is return_probability_limit.
Eigen::Vector3cd asymptotic_origin(double theta,
                                   const InitialCoinState& initial);

/// Mass of the continuous density over the ellipse (adaptive quadrature in
/// principal-axes polar coordinates).  delta_coefficient + this == 1.
double continuous_mass(const InitialCoinState& initial,
                       const CoinParameter& coin, double abs_tol = 1e-7);

/// integral of x^r1 y^r2 times the continuous density over the ellipse.
double density_moment(int r1, int r2, const InitialCoinState& initial,
                      const CoinParameter& coin, double abs_tol = 1e-7);

}  // namespace qwalk
