#include "qwalk/limit_laws.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qwalk/quadrature.hpp"

namespace qwalk {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

double fold_theta(double theta) {
  if (!(theta >= 0.0) || theta >= 2.0 * kPi)
    throw std::domain_error("coin angle out of range [0, 2pi)");
  if (std::abs(theta) < 1e-15 || std::abs(theta - kPi) < 1e-15)
    throw std::domain_error("degenerate coin (theta = 0 or pi)");
  return theta < kPi ? theta : theta - kPi;
}

GTriple g_functions(double theta) {
  if (!(theta > 0.0) || !(theta < kPi))
    throw std::domain_error("g functions need theta strictly inside (0, pi)");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double g1 = 2.0 / (kPi * (1.0 - c)) *
                    (kPi * (1.0 + c) - (3.0 + c * c) * (1.0 - c) / s -
                     4.0 * c * (kPi - theta) / (1.0 + c));
  const double g2 =
      kSqrt2 * (kPi * (1.0 - c) + 2.0 * (c * s - theta)) / (kPi * s);
  const double g3 = s / kPi;
  return {g1, g2, g3};
}

namespace {

Complex eta1(const GTriple& g, Complex a, Complex b, Complex c) {
  return g.g3 * a + 0.5 * g.g2 * b + 0.5 * g.g1 * c;
}

Complex eta2(const GTriple& g, Complex a, Complex b, Complex c) {
  return 0.5 * g.g2 * (a + c) + (1.0 - 2.0 * g.g3) * b;
}

}  // namespace

double return_probability_limit(double theta,
                                const InitialCoinState& initial) {
  const GTriple g = g_functions(fold_theta(theta));
  const Complex a = initial.alpha(), b = initial.beta(), c = initial.gamma();
  return std::norm(eta1(g, a, b, c)) + std::norm(eta2(g, a, b, c)) +
         std::norm(eta1(g, c, b, a));
}

double delta_coefficient(double theta, const InitialCoinState& initial) {
  const GTriple g = g_functions(fold_theta(theta));
  const Complex a = initial.alpha(), b = initial.beta(), c = initial.gamma();
  const double b2 = std::norm(b);
  return b2 + std::real(a * std::conj(c)) * g.g1 +
         std::real((a + c) * std::conj(b)) * g.g2 + (1.0 - 3.0 * b2) * g.g3;
}

double xi(double x, double y, const InitialCoinState& initial,
          const CoinParameter& coin) {
  const double c = coin.c(), s = coin.s();
  const Complex a = initial.alpha(), b = initial.beta(), g = initial.gamma();
  const double rab = std::real(a * std::conj(b));
  const double rbg = std::real(b * std::conj(g));
  const double rag = std::real(a * std::conj(g));
  return (1.0 - y) * (1.0 - y) * std::norm(a) +
         2.0 * (1.0 - y * y) * std::norm(b) +
         (1.0 + y) * (1.0 + y) * std::norm(g) +
         2.0 * kSqrt2 * (x - c * y) * (1.0 - y) / s * rab -
         2.0 * kSqrt2 * (x - c * y) * (1.0 + y) / s * rbg +
         2.0 * (s * s - 2.0 * x * x - (1.0 + c * c) * y * y + 4.0 * c * x * y) /
             (s * s) * rag;
}

bool in_support(double x, double y, const CoinParameter& coin) {
  const double c = coin.c();
  const double p = x + y, q = x - y;
  return p * p / (2.0 * (1.0 + c)) + q * q / (2.0 * (1.0 - c)) < 1.0;
}

double continuous_density(double x, double y, const InitialCoinState& initial,
                          const CoinParameter& coin) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) return 0.0;
  if (!in_support(x, y, coin)) return 0.0;
  return xi(x, y, initial, coin) /
         (2.0 * kPi * kPi * (1.0 - x * x) * (1.0 - y * y));
}

FResult f_single(int x, int y, const CoinParameter& coin, double abs_tol) {
  const double c = coin.c();
  const int m = std::abs(x - y);
  const int n = x + y;
  auto integrand = [c, m, n](double k) {
    const double sh = std::sin(0.5 * k);
    const double ck = std::cos(k);
    const double w1m1 = 2.0 * (1.0 + c) * sh * sh / (1.0 - c);
    const double w1 = 1.0 + w1m1;
    const double r1 = std::sqrt(w1m1 * (w1 + 1.0));
    const double w2 = (-2.0 - (1.0 + c) * ck) / (1.0 - c);
    // w2^2-1 = (1+c)(1+cos k)((3-c)+(1+c)cos k)/(1-c)^2, no cancellation
    const double r2 = std::sqrt((1.0 + c) * (1.0 + ck) *
                                ((3.0 - c) + (1.0 + c) * ck)) /
                      (1.0 - c);
    const double base1 = w1 - r1;
    const double base2 = -1.0 / (-w2 + r2);  // w2 + sqrt(w2^2-1), w2 < -1
    const double cnk = std::cos(n * k);
    const double t1 = (cnk * std::pow(base1, m) - 1.0) / r1;
    const double t2 = (cnk * std::pow(base2, m) - 1.0) / r2;
    return t1 + t2;
  };
  const double scale = 1.0 / (8.0 * kPi * (1.0 - c));
  auto r = quadrature::integrate(integrand, 0.0, 0.5 * kPi,
                                 abs_tol / std::abs(scale));
  return {scale * r.value, std::abs(scale) * r.error_estimate, r.converged};
}

FResult f_double(int x, int y, const CoinParameter& coin, double abs_tol) {
  const double c = coin.c();
  auto integrand = [c, x, y](double a, double b) {
    const double su = std::sin(0.25 * (a + b));
    const double sv = std::sin(0.25 * (a - b));
    const double one_m_p = (1.0 + c) * su * su + (1.0 - c) * sv * sv;
    const double den = 16.0 * one_m_p * (2.0 - one_m_p);
    if (den <= 0.0) return 0.0;  // the zone-center corner, measure zero
    const double sh = std::sin(0.5 * (a * x + b * y));
    return -2.0 * sh * sh / den;
  };
  const double norm = 4.0 * kPi * kPi;  // (2 pi)^2 measure
  const double splits[] = {0.0};
  auto r = quadrature::integrate_2d(integrand, -kPi, kPi, -kPi, kPi,
                                    abs_tol * norm, 400000, splits, splits);
  return {r.value / norm, r.error_estimate / norm, r.converged};
}

namespace {

Complex A_of(Complex z1, Complex z2, double c, double s) {
  return kSqrt2 * s * z1 + (1.0 + c) * z2;
}
Complex B_of(Complex z1, Complex z2, double c, double s) {
  return kSqrt2 * s * z1 - (1.0 - c) * z2;
}

}  // namespace

Eigen::Vector3cd asymptotic_amplitude(int x, int y,
                                      const InitialCoinState& initial,
                                      const CoinParameter& coin) {
  std::map<std::pair<int, int>, double> cache;
  auto F = [&](int dx, int dy) {
    const auto key = std::make_pair(dx, dy);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const FResult r = f_single(dx, dy, coin);
    if (!r.converged)
      throw std::runtime_error("F quadrature did not converge");
    cache.emplace(key, r.value);
    return r.value;
  };
  const double c = coin.c(), s = coin.s();
  const Complex al = initial.alpha(), be = initial.beta(), ga = initial.gamma();
  const Complex Aab = A_of(al, be, c, s), Bab = B_of(al, be, c, s);
  const Complex Agb = A_of(ga, be, c, s), Bgb = B_of(ga, be, c, s);
  const Complex A2 = A_of(al + ga, 2.0 * be, c, s);
  const Complex B2 = B_of(al + ga, 2.0 * be, c, s);

  const Complex comp0 =
      kSqrt2 * s *
      (-Aab * F(x - 1, y) - Bgb * F(x - 1, y + 1) + (Aab + Bab) * F(x, y) +
       (Agb + Bgb) * F(x, y + 1) - Bab * F(x + 1, y) - Agb * F(x + 1, y + 1));
  const Complex comp1 =
      (1.0 + c) * (-Aab * F(x - 1, y - 1) - Bgb * F(x - 1, y) +
                   Bab * F(x, y - 1) + A2 * F(x, y) + Bgb * F(x, y + 1) -
                   Bab * F(x + 1, y) - Agb * F(x + 1, y + 1)) -
      (1.0 - c) * (-Aab * F(x - 1, y) - Bgb * F(x - 1, y + 1) +
                   Aab * F(x, y - 1) + B2 * F(x, y) + Agb * F(x, y + 1) -
                   Bab * F(x + 1, y - 1) - Agb * F(x + 1, y));
  const Complex comp2 =
      kSqrt2 * s *
      (-Aab * F(x - 1, y - 1) - Bgb * F(x - 1, y) + (Aab + Bab) * F(x, y - 1) +
       (Agb + Bgb) * F(x, y) - Bab * F(x + 1, y - 1) - Agb * F(x + 1, y));
  return {comp0, comp1, comp2};
}

Eigen::Vector3cd asymptotic_origin(double theta,
                                   const InitialCoinState& initial) {
  const GTriple g = g_functions(fold_theta(theta));
  const Complex a = initial.alpha(), b = initial.beta(), c = initial.gamma();
  return {eta1(g, a, b, c), eta2(g, a, b, c), eta1(g, c, b, a)};
}

namespace {

// Ellipse interior in principal-axes polar form:
//   x = rho (sqrt((1+c)/2) cos phi + sqrt((1-c)/2) sin phi)
//   y = rho (sqrt((1+c)/2) cos phi - sqrt((1-c)/2) sin phi)
// with dx dy = |s| rho drho dphi.  The density has integrable spikes where
// the ellipse touches |x|=1 / |y|=1; interior-node panels never evaluate the
// boundary itself.
double disc_integral(const InitialCoinState& initial, const CoinParameter& coin,
                     int r1, int r2, double abs_tol) {
  const double c = coin.c();
  const double sp = std::sqrt(0.5 * (1.0 + c));
  const double sm = std::sqrt(0.5 * (1.0 - c));
  const double jac = std::abs(coin.s());
  auto inner_at = [&](double phi) {
    const double X = sp * std::cos(phi) + sm * std::sin(phi);
    const double Y = sp * std::cos(phi) - sm * std::sin(phi);
    auto f = [&](double rho) {
      const double x = rho * X, y = rho * Y;
      double v = rho * continuous_density(x, y, initial, coin);
      for (int i = 0; i < r1; ++i) v *= x;
      for (int i = 0; i < r2; ++i) v *= y;
      return v;
    };
    auto r = quadrature::integrate(f, 0.0, 1.0, abs_tol / 40.0, 4000);
    return r.value;
  };
  // split the angular integral at the four tangency directions
  const double phi1 = std::atan2(sm, sp);
  double marks[4] = {phi1, kPi - phi1, kPi + phi1, 2.0 * kPi - phi1};
  double total = 0.0;
  double lo = 0.0;
  for (int seg = 0; seg <= 4; ++seg) {
    const double hi = seg < 4 ? marks[seg] : 2.0 * kPi;
    auto r = quadrature::integrate(inner_at, lo, hi, abs_tol / 5.0, 8000);
    if (!r.converged)
      throw std::runtime_error("ellipse quadrature did not converge");
    total += r.value;
    lo = hi;
  }
  return jac * total;
}

}  // namespace

double continuous_mass(const InitialCoinState& initial,
                       const CoinParameter& coin, double abs_tol) {
  return disc_integral(initial, coin, 0, 0, abs_tol);
}

double density_moment(int r1, int r2, const InitialCoinState& initial,
                      const CoinParameter& coin, double abs_tol) {
  if (r1 < 0 || r2 < 0) throw std::invalid_argument("negative moment order");
  return disc_integral(initial, coin, r1, r2, abs_tol);
}

}  // namespace qwalk
