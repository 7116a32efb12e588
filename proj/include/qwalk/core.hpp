#pragma once
// Domain types for the three-state alternate walk on the square lattice:
// coin parameterization, lattice windows, amplitude fields and initial states.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Coin angle theta in [0, 2pi) with cached cos/sin.  The walk is trivial at
/// theta = 0 and pi (coin degenerates), so those angles are rejected.
class CoinParameter {
 public:
  explicit CoinParameter(double theta);

  double theta() const { return theta_; }
  double c() const { return c_; }
  double s() const { return s_; }

  /// c = -1/3, s = 2*sqrt(2)/3: the 3x3 Grover coin.
  static CoinParameter grover();

 private:
  double theta_;
  double c_;
  double s_;
};

using CoinMatrix = Eigen::Matrix3d;

/// The parameterized symmetric coin
///   [ -(1+c)/2   s/sqrt2   (1-c)/2 ]
///   [  s/sqrt2   c         s/sqrt2 ]
///   [  (1-c)/2   s/sqrt2  -(1+c)/2 ]
/// Real, symmetric and involutive (M*M = I).
CoinMatrix build_coin(double theta);
CoinMatrix build_coin(const CoinParameter& coin);

/// Coin amplitudes (alpha, beta, gamma) of the state placed at the origin.
/// Must be unit norm within 1e-10 unless `normalize` is set; the all-zero
/// vector is rejected either way.
class InitialCoinState {
 public:
  InitialCoinState(Complex alpha, Complex beta, Complex gamma,
                   bool normalize = false);

  Complex alpha() const { return a_[0]; }
  Complex beta() const { return a_[1]; }
  Complex gamma() const { return a_[2]; }
  Eigen::Vector3cd vector() const { return {a_[0], a_[1], a_[2]}; }

 private:
  std::array<Complex, 3> a_;
};

/// Square window |x| <= T, |y| <= T with a bijective flat index,
/// x-major: flat = (x+T)*(2T+1) + (y+T).
class LatticeWindow {
 public:
  explicit LatticeWindow(int half_width);

  int half_width() const { return half_width_; }
  int side() const { return side_; }
  std::size_t size() const { return static_cast<std::size_t>(side_) * side_; }
  bool contains(int x, int y) const {
    return x >= -half_width_ && x <= half_width_ && y >= -half_width_ &&
           y <= half_width_;
  }
  std::size_t flatten(int x, int y) const {
    return static_cast<std::size_t>(x + half_width_) * side_ +
           static_cast<std::size_t>(y + half_width_);
  }
  std::pair<int, int> unflatten(std::size_t i) const {
    const int x = static_cast<int>(i / side_) - half_width_;
    const int y = static_cast<int>(i % side_) - half_width_;
    return {x, y};
  }

 private:
  int half_width_;
  int side_;
};

/// Amplitude field with `n` coin components over a window, stored as
/// separate real/imag planes so the coin mix is plain real arithmetic.
class PlanarField {
 public:
  PlanarField(LatticeWindow window, int components);

  const LatticeWindow& window() const { return window_; }
  int components() const { return components_; }

  std::span<double> re(int comp) { return {re_[comp].data(), re_[comp].size()}; }
  std::span<double> im(int comp) { return {im_[comp].data(), im_[comp].size()}; }
  std::span<const double> re(int comp) const { return {re_[comp].data(), re_[comp].size()}; }
  std::span<const double> im(int comp) const { return {im_[comp].data(), im_[comp].size()}; }

  Complex at(int comp, int x, int y) const {
    const std::size_t i = window_.flatten(x, y);
    return {re_[comp][i], im_[comp][i]};
  }
  void set(int comp, int x, int y, Complex v) {
    const std::size_t i = window_.flatten(x, y);
    re_[comp][i] = v.real();
    im_[comp][i] = v.imag();
  }

  /// Sum of |amplitude|^2 over all sites and components, fixed pairwise
  /// summation order (reproducible independent of threading).
  double norm_squared() const;

  /// True when every imaginary plane is identically zero.
  bool is_real() const;

 private:
  LatticeWindow window_;
  int components_;
  std::vector<std::vector<double>> re_;
  std::vector<std::vector<double>> im_;
};

/// Time-stamped three-component amplitude field psi_t(x,y).
class WalkState {
 public:
  WalkState(LatticeWindow window, int time);

  int time() const { return time_; }
  const LatticeWindow& window() const { return field_.window(); }
  const PlanarField& field() const { return field_; }
  PlanarField& field() { return field_; }

  Eigen::Vector3cd amplitude(int x, int y) const {
    return {field_.at(0, x, y), field_.at(1, x, y), field_.at(2, x, y)};
  }
  void set_amplitude(int x, int y, const Eigen::Vector3cd& v) {
    for (int c = 0; c < 3; ++c) field_.set(c, x, y, v[c]);
  }

  double norm_squared() const { return field_.norm_squared(); }

  /// Chebyshev radius of the support; never exceeds time() for states
  /// evolved from the origin.
  int support_half_width() const { return support_; }

  void set_time(int t) { time_ = t; }
  void set_support_half_width(int r) { support_ = r; }

  /// Copy into a larger window (same time/support).
  WalkState embedded(int half_width) const;

 private:
  PlanarField field_;
  int time_;
  int support_;
};

/// psi_0 localized at the origin with coin amplitudes (alpha, beta, gamma).
WalkState make_initial(Complex alpha, Complex beta, Complex gamma,
                       bool normalize = false);
WalkState make_initial(const InitialCoinState& initial);

/// Four-state walk on the same lattice: 4x4 coin, one move per coin index,
/// shift map 0:(-1,0) 1:(+1,0) 2:(0,-1) 3:(0,+1).
struct FourStateSpec {
  Eigen::Matrix4d coin;
  std::array<Complex, 4> initial;

  /// Grover 4x4 coin (diagonal -1/2, off-diagonal +1/2) with the
  /// symmetric x-pair initial state (1,1,0,0)/sqrt2.
  static FourStateSpec grover(std::array<Complex, 4> initial = {
      Complex{1.0 / 1.4142135623730951, 0.0},
      Complex{1.0 / 1.4142135623730951, 0.0}, Complex{0.0, 0.0},
      Complex{0.0, 0.0}});
};

Eigen::Matrix4d grover_coin4();

/// Four-component analogue of WalkState, used by the four-state engine and
/// the entanglement comparison.
class FourWalkState {
 public:
  FourWalkState(LatticeWindow window, int time);

  int time() const { return time_; }
  const LatticeWindow& window() const { return field_.window(); }
  const PlanarField& field() const { return field_; }
  PlanarField& field() { return field_; }
  double norm_squared() const { return field_.norm_squared(); }
  int support_half_width() const { return support_; }
  void set_time(int t) { time_ = t; }
  void set_support_half_width(int r) { support_ = r; }

 private:
  PlanarField field_;
  int time_;
  int support_;
};

/// Fixed-order pairwise sum; deterministic for a given input regardless of
/// optimization level or thread count of the caller.
double pairwise_sum(std::span<const double> v);

}  // namespace qwalk
