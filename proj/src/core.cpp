#include "qwalk/core.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {
constexpr double kDegenerateTol = 1e-15;
}

CoinParameter::CoinParameter(double theta) : theta_(theta) {
  if (!(theta >= 0.0) || theta >= 2.0 * kPi)
    throw std::domain_error("coin angle out of range [0, 2pi)");
  if (std::abs(theta) < kDegenerateTol || std::abs(theta - kPi) < kDegenerateTol)
    throw std::domain_error("degenerate coin (theta = 0 or pi)");
  c_ = std::cos(theta);
  s_ = std::sin(theta);
}

CoinParameter CoinParameter::grover() {
  return CoinParameter(std::acos(-1.0 / 3.0));
}

CoinMatrix build_coin(const CoinParameter& coin) {
  const double c = coin.c();
  const double s = coin.s();
  const double sq = s / std::sqrt(2.0);
  CoinMatrix m;
  m << -(1.0 + c) / 2.0, sq, (1.0 - c) / 2.0,
       sq, c, sq,
       (1.0 - c) / 2.0, sq, -(1.0 + c) / 2.0;
  return m;
}

CoinMatrix build_coin(double theta) { return build_coin(CoinParameter(theta)); }

InitialCoinState::InitialCoinState(Complex alpha, Complex beta, Complex gamma,
                                   bool normalize)
    : a_{alpha, beta, gamma} {
  const double n2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
  if (n2 < 1e-30)
    throw std::invalid_argument("initial coin state is not normalizable");
  if (normalize) {
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : a_) z *= inv;
  } else if (std::abs(n2 - 1.0) > 1e-10) {
    throw std::invalid_argument("initial coin state is not unit norm");
  }
}

LatticeWindow::LatticeWindow(int half_width) : half_width_(half_width) {
  if (half_width < 0) throw std::invalid_argument("negative window half-width");
  side_ = 2 * half_width + 1;
}

PlanarField::PlanarField(LatticeWindow window, int components)
    : window_(window), components_(components) {
  re_.resize(components);
  im_.resize(components);
  for (int c = 0; c < components; ++c) {
    re_[c].assign(window.size(), 0.0);
    im_[c].assign(window.size(), 0.0);
  }
}

double pairwise_sum(std::span<const double> v) {
  constexpr std::size_t kLeaf = 32;
  if (v.size() <= kLeaf) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

namespace {
double plane_sum_sq(std::span<const double> p) {
  // pairwise over blocks of squared entries
  constexpr std::size_t kBlock = 1024;
  std::vector<double> partial;
  partial.reserve(p.size() / kBlock + 1);
  for (std::size_t i = 0; i < p.size(); i += kBlock) {
    const std::size_t n = std::min(kBlock, p.size() - i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += p[i + j] * p[i + j];
    partial.push_back(s);
  }
  return pairwise_sum(partial);
}
}  // namespace

double PlanarField::norm_squared() const {
  std::vector<double> parts;
  parts.reserve(2 * components_);
  for (int c = 0; c < components_; ++c) {
    parts.push_back(plane_sum_sq(re(c)));
    parts.push_back(plane_sum_sq(im(c)));
  }
  return pairwise_sum(parts);
}

bool PlanarField::is_real() const {
  for (int c = 0; c < components_; ++c)
    for (double v : im(c))
      if (v != 0.0) return false;
  return true;
}

WalkState::WalkState(LatticeWindow window, int time)
    : field_(window, 3), time_(time), support_(0) {
  if (time < 0) throw std::invalid_argument("negative time");
}

WalkState WalkState::embedded(int half_width) const {
  if (half_width < window().half_width())
    throw std::invalid_argument("embedding window smaller than current");
  WalkState out(LatticeWindow(half_width), time_);
  const int T = window().half_width();
  for (int x = -T; x <= T; ++x)
    for (int y = -T; y <= T; ++y)
      out.set_amplitude(x, y, amplitude(x, y));
  out.set_support_half_width(support_);
  return out;
}

WalkState make_initial(Complex alpha, Complex beta, Complex gamma,
                       bool normalize) {
  return make_initial(InitialCoinState(alpha, beta, gamma, normalize));
}

WalkState make_initial(const InitialCoinState& initial) {
  WalkState st(LatticeWindow(0), 0);
  st.set_amplitude(0, 0, initial.vector());
  st.set_support_half_width(0);
  return st;
}

Eigen::Matrix4d grover_coin4() {
  Eigen::Matrix4d g = Eigen::Matrix4d::Constant(0.5);
  g.diagonal().setConstant(-0.5);
  return g;
}

FourStateSpec FourStateSpec::grover(std::array<Complex, 4> initial) {
  double n2 = 0.0;
  for (const auto& q : initial) n2 += std::norm(q);
  if (std::abs(n2 - 1.0) > 1e-10)
    throw std::invalid_argument("four-state initial is not unit norm");
  return FourStateSpec{grover_coin4(), initial};
}

FourWalkState::FourWalkState(LatticeWindow window, int time)
    : field_(window, 4), time_(time), support_(0) {}

}  // namespace qwalk
