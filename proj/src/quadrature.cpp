#include "qwalk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace qwalk::quadrature {

namespace {

// K15 abscissae (positive half) and weights; G7 reuses the odd-indexed
// abscissae (1, 3, 5, 7).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;  // K15
  double error;  // |K15 - G7|
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo,
                     double hi) {
  const double mid = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double fk[15];
  for (int i = 0; i < 7; ++i) {
    fk[i] = f(mid - h * kXgk[i]);
    fk[14 - i] = f(mid + h * kXgk[i]);
  }
  fk[7] = f(mid);
  double k15 = kWgk[7] * fk[7];
  for (int i = 0; i < 7; ++i) k15 += kWgk[i] * (fk[i] + fk[14 - i]);
  double g7 = kWg[3] * fk[7];
  for (int i = 0; i < 3; ++i) g7 += kWg[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
  return {lo, hi, k15 * h, std::abs(k15 - g7) * h};
}

double kahan_total(std::vector<double>& vals) {
  double sum = 0.0, comp = 0.0;
  for (double v : vals) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol, std::size_t max_intervals) {
  Result res;
  if (!(hi > lo)) {
    res.converged = true;
    return res;
  }
  struct Entry {
    Panel p;
    std::size_t id;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.p.error != b.p.error) return a.p.error < b.p.error;
    return a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::size_t next_id = 0;
  double total_err = 0.0;
  auto push = [&](double a, double b) {
    Panel p = evaluate_panel(f, a, b);
    res.evaluations += 15;
    total_err += p.error;
    heap.push({p, next_id++});
  };
  push(lo, hi);
  while (total_err > abs_tol && heap.size() < max_intervals) {
    Entry top = heap.top();
    heap.pop();
    total_err -= top.p.error;
    const double mid = 0.5 * (top.p.lo + top.p.hi);
    if (mid <= top.p.lo || mid >= top.p.hi) {  // interval at ulp resolution
      total_err += top.p.error;
      heap.push(top);
      break;
    }
    push(top.p.lo, mid);
    push(mid, top.p.hi);
  }
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top().p);
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  std::vector<double> vals;
  vals.reserve(panels.size());
  for (const Panel& p : panels) vals.push_back(p.value);
  res.value = kahan_total(vals);
  res.error_estimate = total_err;
  res.converged = total_err <= abs_tol;
  return res;
}

namespace {

struct Cell {
  double ax, bx, ay, by;
  double value;
  double error;
};

Cell evaluate_cell(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by) {
  const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double nx[15], ny[15];
  for (int i = 0; i < 7; ++i) {
    nx[i] = mx - hx * kXgk[i];
    nx[14 - i] = mx + hx * kXgk[i];
    ny[i] = my - hy * kXgk[i];
    ny[14 - i] = my + hy * kXgk[i];
  }
  nx[7] = mx;
  ny[7] = my;
  double fv[15][15];
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) fv[i][j] = f(nx[i], ny[j]);
  auto wk = [](int i) { return kWgk[i < 8 ? i : 14 - i]; };
  double k15 = 0.0;
  for (int i = 0; i < 15; ++i) {
    double row = 0.0;
    for (int j = 0; j < 15; ++j) row += wk(j) * fv[i][j];
    k15 += wk(i) * row;
  }
  // G7 nodes sit at Kronrod indices 1,3,5,7,9,11,13
  auto wg = [](int i) { const int q = i < 8 ? i : 14 - i; return kWg[q / 2]; };
  double g7 = 0.0;
  for (int i = 1; i <= 13; i += 2) {
    double row = 0.0;
    for (int j = 1; j <= 13; j += 2) row += wg(j) * fv[i][j];
    g7 += wg(i) * row;
  }
  return {ax, bx, ay, by, k15 * hx * hy, std::abs(k15 - g7) * hx * hy};
}

}  // namespace

Result integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, double abs_tol,
                    std::size_t max_cells, std::span<const double> x_splits,
                    std::span<const double> y_splits) {
  Result res;
  std::vector<double> xs{ax}, ys{ay};
  for (double s : x_splits)
    if (s > ax && s < bx) xs.push_back(s);
  for (double s : y_splits)
    if (s > ay && s < by) ys.push_back(s);
  xs.push_back(bx);
  ys.push_back(by);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  struct Entry {
    Cell c;
    std::size_t id;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.c.error != b.c.error) return a.c.error < b.c.error;
    return a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::size_t next_id = 0;
  double total_err = 0.0;
  auto push = [&](double x0, double x1, double y0, double y1) {
    Cell c = evaluate_cell(f, x0, x1, y0, y1);
    res.evaluations += 225;
    total_err += c.error;
    heap.push({c, next_id++});
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
      push(xs[i], xs[i + 1], ys[j], ys[j + 1]);

  while (total_err > abs_tol && heap.size() + 1 < max_cells) {
    Entry top = heap.top();
    heap.pop();
    total_err -= top.c.error;
    const Cell& c = top.c;
    const bool split_x = (c.bx - c.ax) >= (c.by - c.ay);
    if (split_x) {
      const double mid = 0.5 * (c.ax + c.bx);
      if (mid <= c.ax || mid >= c.bx) {
        total_err += c.error;
        heap.push(top);
        break;
      }
      push(c.ax, mid, c.ay, c.by);
      push(mid, c.bx, c.ay, c.by);
    } else {
      const double mid = 0.5 * (c.ay + c.by);
      if (mid <= c.ay || mid >= c.by) {
        total_err += c.error;
        heap.push(top);
        break;
      }
      push(c.ax, c.bx, c.ay, mid);
      push(c.ax, c.bx, mid, c.by);
    }
  }
  std::vector<Cell> cells;
  cells.reserve(heap.size());
  while (!heap.empty()) {
    cells.push_back(heap.top().c);
    heap.pop();
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.ax != b.ax) return a.ax < b.ax;
    if (a.ay != b.ay) return a.ay < b.ay;
    if (a.bx != b.bx) return a.bx < b.bx;
    return a.by < b.by;
  });
  std::vector<double> vals;
  vals.reserve(cells.size());
  for (const Cell& c : cells) vals.push_back(c.value);
  res.value = kahan_total(vals);
  res.error_estimate = total_err;
  res.converged = total_err <= abs_tol;
  return res;
}

}  // namespace qwalk::quadrature
