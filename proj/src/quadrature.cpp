#include "fracdiff/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "fracdiff/evaluation.hpp"

namespace fracdiff {

namespace {

// Kronrod-15 abscissae on [0,1] (positive half) and weights; Gauss-7
// weights aligned with the odd Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {a, b, resk * h, std::abs((resk - resg) * h)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, long max_evals) {
  if (!(b > a)) return {0.0, 0.0, 0};
  std::priority_queue<Panel> heap;
  heap.push(gk15(f, a, b));
  long evals = 15;
  double total = heap.top().value;
  double err = heap.top().error;
  while (err > abs_tol && heap.size() < 4096) {
    if (evals + 30 > max_evals) {
      throw convergence_error("integrate: evaluation budget exhausted");
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  if (err > abs_tol) {
    throw convergence_error("integrate: failed to reach tolerance");
  }
  return {total, err, evals};
}

namespace {

// Grow [lo, hi] outward until |g| at both edges is below edge_tol * peak.
void grow_window(const std::function<double(double)>& g, double& lo,
                 double& hi, double edge_tol) {
  double peak = 0.0;
  for (int i = 0; i <= 32; ++i) {
    peak = std::max(peak, std::abs(g(lo + (hi - lo) * i / 32.0)));
  }
  if (peak == 0.0) peak = 1.0;
  int guard = 0;
  while (std::abs(g(lo)) > edge_tol * peak && guard++ < 60) {
    lo -= std::max(2.0, 0.5 * std::abs(lo));
  }
  guard = 0;
  while (std::abs(g(hi)) > edge_tol * peak && guard++ < 60) {
    hi += std::max(2.0, 0.5 * std::abs(hi));
  }
}

}  // namespace

QuadResult integrate_half_line(const std::function<double(double)>& f,
                               double abs_tol, long max_evals,
                               double edge_tol) {
  auto g = [&f](double u) {
    const double tau = std::exp(u);
    return f(tau) * tau;
  };
  double lo = -6.0, hi = 6.0;
  grow_window(g, lo, hi, edge_tol);
  return integrate(g, lo, hi, abs_tol, max_evals);
}

QuadResult integrate_real_line(const std::function<double(double)>& f,
                               double abs_tol, long max_evals) {
  double lo = -8.0, hi = 8.0;
  grow_window(f, lo, hi, 1e-14);
  return integrate(f, lo, hi, abs_tol, max_evals);
}

}  // namespace fracdiff
