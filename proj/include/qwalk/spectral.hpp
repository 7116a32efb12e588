#pragma once
// Momentum-space step matrix U(a,b) = R(b) C R(a) C, its closed-form
// eigenphases and eigenvectors, group velocities of the moving branches, and
// the limit joint moments of the rescaled walk via zone quadrature.

#include <array>

#include <Eigen/Dense>

#include "qwalk/core.hpp"
#include "qwalk/engine.hpp"

namespace qwalk {

struct MomentumPoint {
  double a, b;
};

enum class Axis { a, b };

/// U(a,b) with R(k) = diag(e^{ik}, 1, e^{-ik}).
Eigen::Matrix3cd step_matrix(MomentumPoint p, const CoinParameter& coin);

/// (nu1, nu2, nu3) = (0, 2 acos(P), -2 acos(P)) with
/// P = (1+c)/2 cos((a+b)/2) + (1-c)/2 cos((a-b)/2); the acos argument is
/// clipped when within 1e-12 of +-1.
std::array<double, 3> eigenphases(MomentumPoint p, const CoinParameter& coin);

/// Unit eigenvector of the flat (eigenvalue 1) branch; throws
/// std::domain_error at the degenerate set where its normalizer vanishes.
Eigen::Vector3cd eigenvector_v1(MomentumPoint p, const CoinParameter& coin);

/// D_a lambda_j / lambda_j (axis a) or the b analogue, j in {2,3}.  Bounded
/// by 1 in magnitude; throws std::domain_error when 4 - (2P)^2 <= 1e-12.
double group_velocity(MomentumPoint p, int j, Axis axis,
                      const CoinParameter& coin);

/// Limit of E[(X_t/t)^{r1} (Y_t/t)^{r2}]: zone integral of the branch
/// velocities weighted by |<v_j|psi0>|^2.  The flat branch contributes only
/// to the (0,0) moment.
double limit_moment(int r1, int r2, const CoinParameter& coin,
                    const InitialCoinState& initial, double abs_tol = 1e-8);

/// Sum of x^r1 y^r2 P(x,y); with `rescaled`, divided by t^{r1+r2}.
double empirical_moment(const Distribution2D& dist, int r1, int r2,
                        bool rescaled);

}  // namespace qwalk
