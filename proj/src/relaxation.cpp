#include "treeub/relaxation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace treeub {

BranchFractions::BranchFractions(std::vector<double> x) : x_(std::move(x)) {
  double total = 0.0;
  for (double v : x_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError("branch fraction " + std::to_string(v) + " outside [0, 1]");
    }
    total += v;
  }
  if (total > 1.0 + kSumSlack) {
    throw ValidationError("branch fractions sum to " + std::to_string(total) + " > 1");
  }
  std::sort(x_.begin(), x_.end(), std::greater<>());
}

double BranchFractions::sum() const { return std::accumulate(x_.begin(), x_.end(), 0.0); }

namespace {

using relax_detail::branch_integral;
using relax_detail::pair_integral;

// f on a sorted vector without range checks, so finite differences can step
// slightly outside the feasible set.
double f_sorted(std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += branch_integral(x[i]);
    for (std::size_t j = i + 1; j < x.size(); ++j) total += pair_integral(x[i], x[j]);
  }
  return total;
}

double f_unsorted(std::vector<double> x) {
  std::sort(x.begin(), x.end(), std::greater<>());
  return f_sorted(x);
}

// ---- quadrature ----------------------------------------------------------

struct Affine {
  double c0;
  double c1;
  double operator()(double y) const { return c0 + c1 * y; }
};

// Integrand |alpha + beta*y + gamma*t| over a <= y <= b, lo(y) <= t <= hi(y).
struct AbsLinearCell {
  double alpha;
  double beta;
  double gamma;
  Affine lo;
  Affine hi;
};

constexpr std::array<double, 3> kGauss3Nodes{-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kGauss3Weights{0.5555555555555556, 0.8888888888888888,
                                               0.5555555555555556};
constexpr std::array<double, 5> kGauss5Nodes{-0.9061798459386640, -0.5384693101056831, 0.0,
                                             0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGauss5Weights{0.2369268850561891, 0.4786286704993665,
                                               0.5688888888888889, 0.4786286704993665,
                                               0.2369268850561891};

template <std::size_t N>
double gauss(const std::function<double(double)>& g, double a, double b,
             const std::array<double, N>& nodes, const std::array<double, N>& weights) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) acc += weights[i] * g(mid + half * nodes[i]);
  return acc * half;
}

// Inner integral over t, split at the zero of the linear integrand.
double inner_integral(const AbsLinearCell& cell, double y) {
  const double lo = cell.lo(y);
  const double hi = cell.hi(y);
  if (!(hi > lo)) return 0.0;
  const double base = cell.alpha + cell.beta * y;
  auto h = [&](double t) { return std::abs(base + cell.gamma * t); };
  std::function<double(double)> fn = h;
  if (cell.gamma != 0.0) {
    const double root = -base / cell.gamma;
    if (root > lo && root < hi) {
      return gauss(fn, lo, root, kGauss3Nodes, kGauss3Weights) +
             gauss(fn, root, hi, kGauss3Nodes, kGauss3Weights);
    }
  }
  return gauss(fn, lo, hi, kGauss3Nodes, kGauss3Weights);
}

constexpr int kMaxBisections = 12;

double adaptive_outer(const std::function<double(double)>& g, double a, double b, double tol,
                      int depth, double& worst) {
  const double coarse = gauss(g, a, b, kGauss3Nodes, kGauss3Weights);
  const double fine = gauss(g, a, b, kGauss5Nodes, kGauss5Weights);
  const double err = std::abs(fine - coarse);
  if (err <= tol || depth == 0) {
    worst = std::max(worst, err);
    return fine;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_outer(g, a, mid, 0.5 * tol, depth - 1, worst) +
         adaptive_outer(g, mid, b, 0.5 * tol, depth - 1, worst);
}

double integrate_cell(const AbsLinearCell& cell, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  // Outer breakpoints: where the zero line of the integrand meets the lower
  // or upper inner bound, or where the bounds cross.
  std::vector<double> cuts{a, b};
  auto add_root = [&](double k0, double k1) {
    if (k1 == 0.0) return;
    const double y = -k0 / k1;
    if (y > a && y < b) cuts.push_back(y);
  };
  add_root(cell.alpha + cell.gamma * cell.lo.c0, cell.beta + cell.gamma * cell.lo.c1);
  add_root(cell.alpha + cell.gamma * cell.hi.c0, cell.beta + cell.gamma * cell.hi.c1);
  add_root(cell.hi.c0 - cell.lo.c0, cell.hi.c1 - cell.lo.c1);
  std::sort(cuts.begin(), cuts.end());

  const std::function<double(double)> g = [&](double y) { return inner_integral(cell, y); };
  double total = 0.0;
  double worst = 0.0;
  const double piece_tol = tol / static_cast<double>(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += adaptive_outer(g, cuts[i], cuts[i + 1], piece_tol, kMaxBisections, worst);
  }
  if (worst > tol) {
    throw QuadratureError("quadrature did not converge: error estimate " + std::to_string(worst) +
                              " exceeds tolerance " + std::to_string(tol),
                          worst);
  }
  return total;
}

// ---- projected gradient ascent ------------------------------------------

// Euclidean projection onto {x >= 0, sum(x) <= 1}.
std::vector<double> project(std::vector<double> x) {
  double clipped_sum = 0.0;
  for (double& v : x) {
    v = std::max(v, 0.0);
    clipped_sum += v;
  }
  if (clipped_sum <= 1.0) return x;
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cumulative += u[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (double& v : x) v = std::max(v - theta, 0.0);
  return x;
}

std::vector<double> gradient(const std::vector<double>& x) {
  constexpr double h = 1e-6;
  std::vector<double> g(x.size());
  std::vector<double> probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f_unsorted(probe);
    probe[i] = x[i] - h;
    const double down = f_unsorted(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

double stationarity(const std::vector<double>& x, const std::vector<double>& g) {
  std::vector<double> step(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) step[i] = x[i] + g[i];
  step = project(std::move(step));
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(step[i] - x[i]));
  return worst;
}

struct AscentRun {
  std::vector<double> x;
  double value;
  double stationarity;
};

AscentRun ascend(std::vector<double> x, const MaximizeConfig& config) {
  x = project(std::move(x));
  double value = f_unsorted(x);
  double step = 1.0;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const auto g = gradient(x);
    if (stationarity(x, g) <= config.stationarity_tol) break;
    bool improved = false;
    while (step > 1e-14) {
      std::vector<double> trial(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i];
      trial = project(std::move(trial));
      const double tv = f_unsorted(trial);
      if (tv > value) {
        x = std::move(trial);
        value = tv;
        improved = true;
        step = std::min(step * 2.0, 64.0);
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  return {x, value, stationarity(x, gradient(x))};
}

// f is flat along some faces (k = 2 is a path for every split), so values this
// close count as a tie and the most balanced point wins.
constexpr double kValueTie = 1e-12;

bool better(const AscentRun& a, const AscentRun& b) {
  if (std::abs(a.value - b.value) > kValueTie) return a.value > b.value;
  return a.x < b.x;
}

}  // namespace

double f_closed(const BranchFractions& x) { return f_sorted(x.values()); }

double f_polynomial(const BranchFractions& x, PolynomialBranch branch) {
  if (x.size() == 0) return 0.0;
  if (branch == PolynomialBranch::kDominantFirst) {
    // Forces the x_1 > 1/2 formulas for the first branch only.
    double total = x[0] - 1.5 * x[0] * x[0] + 5.0 / 6.0 * x[0] * x[0] * x[0] - 1.0 / 6.0;
    for (int j = 1; j < x.size(); ++j) {
      const double xj = x[j];
      total += xj * xj / 2.0 - xj * xj * xj / 2.0;
      total += 2.5 * x[0] * x[0] * xj + 0.5 * x[0] * xj * xj - 3.0 * x[0] * xj + xj -
               2.0 / 3.0 * xj * xj * xj;
      for (int l = j + 1; l < x.size(); ++l) total += pair_integral(xj, x[l]);
    }
    return total;
  }
  double total = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    total += x[i] * x[i] / 2.0 - x[i] * x[i] * x[i] / 2.0;
    for (int j = i + 1; j < x.size(); ++j) {
      total += x[i] * x[j] + x[i] * x[j] * x[j] / 2.0 - 1.5 * x[i] * x[i] * x[j] -
               2.0 / 3.0 * x[j] * x[j] * x[j];
    }
  }
  return total;
}

double f_quadrature(const BranchFractions& x, double tol) {
  if (!(tol > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  const int k = x.size();
  const int cells = k + k * (k - 1);
  const double cell_tol = tol / std::max(cells, 1);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double xi = x[i];
    // y in [0, xi], y' in [0, xi - y]: |1 - 2xi + 2y + y'|
    total += integrate_cell({1.0 - 2.0 * xi, 2.0, 1.0, {0.0, 0.0}, {xi, -1.0}}, 0.0, xi, cell_tol);
    for (int j = i + 1; j < k; ++j) {
      const double xj = x[j];
      // y_j in [0, xj], y_i in [y_j, xi]: |1 - 2xi + y_i - y_j|
      total += integrate_cell({1.0 - 2.0 * xi, -1.0, 1.0, {0.0, 1.0}, {xi, 0.0}}, 0.0, xj,
                              cell_tol);
      // y_i in [0, xj], y_j in [y_i, xj]: |1 - 2xj + y_j - y_i|
      total += integrate_cell({1.0 - 2.0 * xj, -1.0, 1.0, {0.0, 1.0}, {xj, 0.0}}, 0.0, xj,
                              cell_tol);
    }
  }
  return total;
}

double f_uniform(int k) {
  if (k < 1) throw ValidationError("f_uniform needs k >= 1");
  const double kd = k;
  return 0.5 - 5.0 / (6.0 * kd) + 1.0 / (3.0 * kd * kd);
}

double f2(double x1, double y, int k) {
  if (k < 2) throw ValidationError("f2 needs k >= 2");
  const double kd = k;
  const double c3 = -5.0 / 6.0 * kd * kd + 4.0 / 3.0 * kd - 0.5;
  const double c2 = (kd - 1.0) * (kd + x1 - 1.0) / 2.0;
  const double c1 = (kd - 1.0) * (5.0 * x1 * x1 - 6.0 * x1 + 2.0) / 2.0;
  const double c0 = x1 - 1.5 * x1 * x1 + 5.0 / 6.0 * x1 * x1 * x1 - 1.0 / 6.0;
  return ((c3 * y + c2) * y + c1) * y + c0;
}

double f2_dy(double x1, double y, int k) {
  if (k < 2) throw ValidationError("f2 needs k >= 2");
  const double kd = k;
  const double c3 = -5.0 / 6.0 * kd * kd + 4.0 / 3.0 * kd - 0.5;
  const double c2 = (kd - 1.0) * (kd + x1 - 1.0) / 2.0;
  const double c1 = (kd - 1.0) * (5.0 * x1 * x1 - 6.0 * x1 + 2.0) / 2.0;
  return (3.0 * c3 * y + 2.0 * c2) * y + c1;
}

namespace {

struct Cubic {
  double c3, c2, c1, c0, scale;
};

Cubic f3_numerator(int k) {
  if (k < 2) throw ValidationError("f3 needs k >= 2 (k = 1 divides by zero)");
  const double kd = k;
  return {-10.0 * kd * kd + 28.0 * kd - 16.0, 27.0 * kd * kd - 75.0 * kd + 42.0,
          -24.0 * kd * kd + 66.0 * kd - 36.0, 8.0 * kd * kd - 21.0 * kd + 11.0,
          6.0 * (kd - 1.0) * (kd - 1.0)};
}

}  // namespace

double f3(double x1, int k) {
  const auto c = f3_numerator(k);
  return (((c.c3 * x1 + c.c2) * x1 + c.c1) * x1 + c.c0) / c.scale;
}

double f3_derivative(double x1, int k) {
  const auto c = f3_numerator(k);
  return ((3.0 * c.c3 * x1 + 2.0 * c.c2) * x1 + c.c1) / c.scale;
}

double f3_second_derivative(double x1, int k) {
  const auto c = f3_numerator(k);
  return (6.0 * c.c3 * x1 + 2.0 * c.c2) / c.scale;
}

std::vector<double> f3_stationary_points(int k) {
  constexpr int kScan = 4096;
  std::vector<double> roots;
  auto d = [k](double x) { return f3_derivative(x, k); };
  // The right end stays strictly inside (1/2, 1).
  const double lo = 0.5;
  const double hi = 1.0 - 1e-9;
  double a = lo;
  double da = d(a);
  for (int i = 1; i <= kScan; ++i) {
    const double b = lo + (hi - lo) * i / kScan;
    const double db = d(b);
    if (da == 0.0 && a > lo) {
      roots.push_back(a);
    } else if ((da < 0.0) != (db < 0.0) && db != 0.0) {
      double left = a;
      double right = b;
      double dl = da;
      for (int it = 0; it < 200 && right - left > 1e-16; ++it) {
        const double mid = 0.5 * (left + right);
        const double dm = d(mid);
        if ((dm < 0.0) == (dl < 0.0)) {
          left = mid;
          dl = dm;
        } else {
          right = mid;
        }
      }
      roots.push_back(0.5 * (left + right));
    }
    a = b;
    da = db;
  }
  return roots;
}

MaximizeResult maximize_f(int k, const MaximizeConfig& config) {
  if (k < 1) throw ValidationError("maximize_f needs k >= 1");
  std::vector<std::vector<double>> starts;
  if (config.include_uniform_start) starts.emplace_back(k, 1.0 / k);
  for (int r = 1; r <= std::max(config.restarts, 0); ++r) {
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> mass(0.2, 1.0);
    std::vector<double> x(k);
    double total = 0.0;
    for (double& v : x) {
      v = expo(rng);
      total += v;
    }
    const double m = mass(rng);
    for (double& v : x) v = v / total * m;
    starts.push_back(std::move(x));
  }
  if (starts.empty()) throw ValidationError("maximize_f needs at least one start");
  const int runs = static_cast<int>(starts.size());

  std::vector<AscentRun> done(runs);
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, runs));
  if (workers == 1) {
    for (int r = 0; r < runs; ++r) done[r] = ascend(starts[r], config);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int r = static_cast<int>(w); r < runs; r += static_cast<int>(workers)) {
          done[r] = ascend(starts[r], config);
        }
      });
    }
  }
  const AscentRun* best = &done[0];
  for (const auto& run : done) {
    if (better(run, *best)) best = &run;
  }
  MaximizeResult result{BranchFractions(best->x), best->value, false, best->stationarity};
  result.converged = best->stationarity <= config.converged_tol;
  return result;
}

Lemma1Gap lemma1_gap(const StarSignature& signature) {
  const double n = signature.order();
  const double k = signature.branches();
  const double ub = static_cast<double>(ub_closed_form_fast(signature).total);
  const double relaxed = n * n * n * f_closed(signature_fractions(signature));
  return {std::abs(ub - relaxed), (4.0 + k) * n * n};
}

double theorem1_value(int n, int k) {
  if (k < 2 || n <= k) throw ValidationError("theorem1_value needs n > k >= 2");
  const double nd = n;
  return f_uniform(k) * nd * nd * nd;
}

Rational ub3_branch_discrepancy(int n, int ni) {
  if (ni < 1 || ni >= n) throw ValidationError("branch length must be in [1, n-1]");
  std::int64_t discrete = 0;
  for (std::int64_t d = 1; d <= ni - 1; ++d) {
    for (std::int64_t dd = 1; dd <= ni - d; ++dd) {
      discrete += std::abs(static_cast<std::int64_t>(n) - 2 * ni - 1 + 2 * d + dd);
    }
  }
  const Rational x(ni, n);
  const Rational n3 = Rational(n) * n * n;
  return Rational(discrete) - n3 * branch_integral(x);
}

Rational ub4_pair_discrepancy(int n, int ni, int nj) {
  if (nj < 1 || ni < nj || ni + nj > n - 1) {
    throw ValidationError("need 1 <= nj <= ni with ni + nj <= n - 1");
  }
  const std::int64_t nn = n;
  std::int64_t discrete = 0;
  for (std::int64_t dj = 1; dj <= std::min<std::int64_t>(nj, ni - 1); ++dj) {
    for (std::int64_t di = dj + 1; di <= ni; ++di) discrete += std::abs(nn - 2 * ni - 1 + di - dj);
  }
  for (std::int64_t di = 1; di <= nj - 1; ++di) {
    for (std::int64_t dj = di + 1; dj <= nj; ++dj) discrete += std::abs(nn - 2 * nj - 1 + dj - di);
  }
  const Rational n3 = Rational(n) * n * n;
  return Rational(discrete) - n3 * pair_integral(Rational(ni, n), Rational(nj, n));
}

}  // namespace treeub
