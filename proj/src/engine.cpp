#include "qwalk/engine.hpp"

#include <cstring>
#include <stdexcept>

#include "qwalk/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwalk {

namespace {

// Element-independent kernels give identical results under any partition,
// so the block split is free to follow the thread count.
void parallel_mix3(double* a0, double* a1, double* a2, std::size_t n,
                   const double* m) {
  const auto& k = kernels::active();
#ifdef _OPENMP
  constexpr std::size_t kBlock = 1 << 15;
  const std::size_t nblk = (n + kBlock - 1) / kBlock;
  if (nblk > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblk); ++b) {
      const std::size_t off = static_cast<std::size_t>(b) * kBlock;
      const std::size_t len = std::min(kBlock, n - off);
      k.mix3(a0 + off, a1 + off, a2 + off, len, m);
    }
    return;
  }
#endif
  k.mix3(a0, a1, a2, n, m);
}

void parallel_mix4(double* a0, double* a1, double* a2, double* a3,
                   std::size_t n, const double* m) {
  const auto& k = kernels::active();
#ifdef _OPENMP
  constexpr std::size_t kBlock = 1 << 15;
  const std::size_t nblk = (n + kBlock - 1) / kBlock;
  if (nblk > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblk); ++b) {
      const std::size_t off = static_cast<std::size_t>(b) * kBlock;
      const std::size_t len = std::min(kBlock, n - off);
      k.mix4(a0 + off, a1 + off, a2 + off, a3 + off, len, m);
    }
    return;
  }
#endif
  k.mix4(a0, a1, a2, a3, n, m);
}

// Shift a plane by one row along x.  Layout is x-major, so this is a single
// move of size-side elements plus zeroing the vacated edge row.
void shift_x(std::span<double> p, int side, int dir) {
  const std::size_t n = p.size();
  const std::size_t row = static_cast<std::size_t>(side);
  if (dir < 0) {
    std::memmove(p.data(), p.data() + row, (n - row) * sizeof(double));
    std::memset(p.data() + (n - row), 0, row * sizeof(double));
  } else {
    std::memmove(p.data() + row, p.data(), (n - row) * sizeof(double));
    std::memset(p.data(), 0, row * sizeof(double));
  }
}

// Shift along y: a one-element move bleeds row ends into the next row's
// vacated column, which must then be zeroed (the true inflow is zero).
void shift_y(std::span<double> p, int side, int dir) {
  const std::size_t n = p.size();
  if (dir < 0) {
    std::memmove(p.data(), p.data() + 1, (n - 1) * sizeof(double));
    p[n - 1] = 0.0;
    for (std::size_t r = 0; r < n; r += side) p[r + side - 1] = 0.0;
  } else {
    std::memmove(p.data() + 1, p.data(), (n - 1) * sizeof(double));
    p[0] = 0.0;
    for (std::size_t r = 0; r < n; r += side) p[r] = 0.0;
  }
}

void apply_coin3(PlanarField& f, const double* m) {
  parallel_mix3(f.re(0).data(), f.re(1).data(), f.re(2).data(), f.re(0).size(), m);
  parallel_mix3(f.im(0).data(), f.im(1).data(), f.im(2).data(), f.im(0).size(), m);
}

void shift_axis3(PlanarField& f, int side, bool x_axis) {
  for (int part = 0; part < 2; ++part) {
    auto p0 = part == 0 ? f.re(0) : f.im(0);
    auto p2 = part == 0 ? f.re(2) : f.im(2);
    if (x_axis) {
      shift_x(p0, side, -1);
      shift_x(p2, side, +1);
    } else {
      shift_y(p0, side, -1);
      shift_y(p2, side, +1);
    }
  }
}

}  // namespace

void step_in_place(WalkState& state, const CoinMatrix& coin) {
  const int T = state.window().half_width();
  if (state.support_half_width() + 1 > T)
    throw std::runtime_error("support would leave window");
  double m[9];
  Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(m) = coin;
  const int side = state.window().side();
  apply_coin3(state.field(), m);
  shift_axis3(state.field(), side, /*x_axis=*/true);
  apply_coin3(state.field(), m);
  shift_axis3(state.field(), side, /*x_axis=*/false);
  state.set_time(state.time() + 1);
  state.set_support_half_width(state.support_half_width() + 1);
}

WalkState step(const WalkState& state, const CoinMatrix& coin) {
  WalkState out = state;
  step_in_place(out, coin);
  return out;
}

WalkState evolve(const WalkState& initial, const CoinMatrix& coin, int steps) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  const int need = initial.support_half_width() + steps + 1;
  WalkState st = initial.window().half_width() >= need
                     ? initial
                     : initial.embedded(need);
  for (int t = 0; t < steps; ++t) step_in_place(st, coin);
  return st;
}

Distribution2D distribution(const WalkState& state) {
  const auto& f = state.field();
  Distribution2D d{state.window(), std::vector<double>(f.re(0).size(), 0.0),
                   state.time()};
  const auto& k = kernels::active();
  for (int c = 0; c < 3; ++c) {
    k.accum_sq(f.re(c).data(), d.p.size(), d.p.data());
    k.accum_sq(f.im(c).data(), d.p.size(), d.p.data());
  }
  return d;
}

Distribution2D distribution(const FourWalkState& state) {
  const auto& f = state.field();
  Distribution2D d{state.window(), std::vector<double>(f.re(0).size(), 0.0),
                   state.time()};
  const auto& k = kernels::active();
  for (int c = 0; c < 4; ++c) {
    k.accum_sq(f.re(c).data(), d.p.size(), d.p.data());
    k.accum_sq(f.im(c).data(), d.p.size(), d.p.data());
  }
  return d;
}

std::vector<std::pair<int, double>> return_probability_series(
    const WalkState& initial, const CoinMatrix& coin, int steps) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  const int need = initial.support_half_width() + steps + 1;
  WalkState st = initial.embedded(std::max(need, initial.window().half_width()));
  std::vector<std::pair<int, double>> series;
  series.reserve(steps + 1);
  auto p00 = [&st] {
    const Eigen::Vector3cd a = st.amplitude(0, 0);
    return a.squaredNorm();
  };
  series.emplace_back(st.time(), p00());
  for (int t = 0; t < steps; ++t) {
    step_in_place(st, coin);
    series.emplace_back(st.time(), p00());
  }
  return series;
}

FourWalkState four_state_run(const FourStateSpec& spec, int steps) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  FourWalkState st(LatticeWindow(steps + 1), 0);
  for (int c = 0; c < 4; ++c) st.field().set(c, 0, 0, spec.initial[c]);
  double m[16];
  Eigen::Map<Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(m) = spec.coin;
  const int side = st.window().side();
  for (int t = 0; t < steps; ++t) {
    if (st.support_half_width() + 1 > st.window().half_width())
      throw std::runtime_error("support would leave window");
    auto& f = st.field();
    parallel_mix4(f.re(0).data(), f.re(1).data(), f.re(2).data(), f.re(3).data(),
                  f.re(0).size(), m);
    parallel_mix4(f.im(0).data(), f.im(1).data(), f.im(2).data(), f.im(3).data(),
                  f.im(0).size(), m);
    for (int part = 0; part < 2; ++part) {
      auto plane = [&](int c) { return part == 0 ? f.re(c) : f.im(c); };
      shift_x(plane(0), side, -1);
      shift_x(plane(1), side, +1);
      shift_y(plane(2), side, -1);
      shift_y(plane(3), side, +1);
    }
    st.set_time(st.time() + 1);
    st.set_support_half_width(st.support_half_width() + 1);
  }
  return st;
}

Distribution2D four_state_evolve(const FourStateSpec& spec, int steps) {
  return distribution(four_state_run(spec, steps));
}

}  // namespace qwalk
