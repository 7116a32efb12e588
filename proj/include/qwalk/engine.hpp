#pragma once
// Exact time evolution: one step is S2 C S1 C (coin, x-shift, coin, y-shift).
// Coin index 0 moves -1, 1 rests, 2 moves +1 along the active axis.  The
// four-state walk applies its coin once and shifts every component.

#include <utility>
#include <vector>

#include "qwalk/core.hpp"

namespace qwalk {

/// Site probabilities P(x,y) = |psi_t(x,y)|^2 at a fixed time.
struct Distribution2D {
  LatticeWindow window;
  std::vector<double> p;
  int time = 0;

  double at(int x, int y) const { return p[window.flatten(x, y)]; }
  double total() const { return pairwise_sum({p.data(), p.size()}); }
};

/// One walk step.  Throws std::runtime_error("support would leave window")
/// when the window has no room left for the support to grow.
WalkState step(const WalkState& state, const CoinMatrix& coin);

/// In-place variant used by the evolution loops.
void step_in_place(WalkState& state, const CoinMatrix& coin);

/// `steps` applications of step, on a window sized once up front.
WalkState evolve(const WalkState& initial, const CoinMatrix& coin, int steps);

Distribution2D distribution(const WalkState& state);
Distribution2D distribution(const FourWalkState& state);

/// (t, P_t(0,0)) for t = 0..steps, computed from a single evolving state.
std::vector<std::pair<int, double>> return_probability_series(
    const WalkState& initial, const CoinMatrix& coin, int steps);

/// Four-state walk from the origin; returns the full amplitude field.
FourWalkState four_state_run(const FourStateSpec& spec, int steps);

Distribution2D four_state_evolve(const FourStateSpec& spec, int steps);

}  // namespace qwalk
