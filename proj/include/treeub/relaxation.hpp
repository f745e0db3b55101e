#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

#include "treeub/branch_fractions.hpp"
#include "treeub/subdivided_star.hpp"

namespace treeub {

// The continuous relaxation f(x) of uB(S)/n^3 for subdivided stars: x_i plays
// the role of n_i/n, and the same-branch and cross-branch pair sums become
// integrals of |1 - 2x_i + (depth terms)| over triangles and rectangles.

using Rational = boost::rational<std::int64_t>;

namespace relax_detail {

// Same-branch integral of one branch of relative length x. Above x = 1/2 the
// integrand changes sign inside the domain.
template <class T>
T branch_integral(const T& x) {
  const T half = T(1) / T(2);
  if (!(half < x)) return x * x / T(2) - x * x * x / T(2);
  return x - T(3) * x * x / T(2) + T(5) * x * x * x / T(6) - T(1) / T(6);
}

// Cross-branch integral for branches xi >= xj. Only xi can exceed 1/2.
template <class T>
T pair_integral(const T& xi, const T& xj) {
  const T half = T(1) / T(2);
  if (!(half < xi)) {
    return xi * xj + xi * xj * xj / T(2) - T(3) * xi * xi * xj / T(2) -
           T(2) * xj * xj * xj / T(3);
  }
  return T(5) * xi * xi * xj / T(2) + xi * xj * xj / T(2) - T(3) * xi * xj + xj -
         T(2) * xj * xj * xj / T(3);
}

}  // namespace relax_detail

// Exact piecewise-polynomial value, branching on x_1 <= 1/2.
double f_closed(const BranchFractions& x);

enum class PolynomialBranch { kBalanced, kDominantFirst };

// Evaluates one polynomial branch regardless of where x_1 lies; used to
// check that the two branches meet at x_1 = 1/2.
double f_polynomial(const BranchFractions& x, PolynomialBranch branch);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// Direct numerical integration of the defining integrals. Each cell is split
// along the line where the integrand vanishes, then Gauss-Legendre is applied;
// adaptive bisection takes over if the embedded error estimate exceeds `tol`.
double f_quadrature(const BranchFractions& x, double tol = 1e-9);

// f(1/k, ..., 1/k) = 1/2 - 5/(6k) + 1/(3k^2), k >= 1.
double f_uniform(int k);

// f(x1, y, ..., y) with k-1 copies of y; valid for x1 >= 1/2 and
// 0 <= y <= (1 - x1)/(k - 1).
double f2(double x1, double y, int k);
double f2_dy(double x1, double y, int k);

// f2 on the face sum(x) = 1, i.e. y = (1 - x1)/(k - 1). Requires k >= 2.
double f3(double x1, int k);
double f3_derivative(double x1, int k);
double f3_second_derivative(double x1, int k);

// Numeric roots of f3' in the open interval (1/2, 1), by sign scan plus
// bisection.
std::vector<double> f3_stationary_points(int k);

struct MaximizeConfig {
  int restarts = 32;
  std::uint64_t seed = 0x5eed;
  int max_iterations = 20000;
  double stationarity_tol = 1e-9;  // stop criterion
  double converged_tol = 1e-7;     // reported as converged below this
  bool include_uniform_start = true;
  unsigned threads = 1;
};

struct MaximizeResult {
  BranchFractions x;
  double value = 0.0;
  bool converged = false;
  double stationarity = 0.0;  // sup-norm of the projected-gradient step
};

// Projected gradient ascent over {x >= 0, sum(x) <= 1} from the uniform point
// and `restarts` random points; returns the best point found, sorted. Ties in
// value go to the lexicographically largest point, so the result does not
// depend on `threads`.
MaximizeResult maximize_f(int k, const MaximizeConfig& config = {});

struct Lemma1Gap {
  double gap = 0.0;    // |uB(S) - n^3 f(n_i/n)|
  double bound = 0.0;  // (4 + k) n^2
};

Lemma1Gap lemma1_gap(const StarSignature& signature);

// Leading term f_uniform(k) n^3 of the best star with k branches; n > k >= 2.
double theorem1_value(int n, int k);

// Signed discrete-minus-continuous discrepancies, in exact arithmetic, for a
// star of order n: the same-branch sum of one branch of length ni, and the
// cross-branch sum of a branch pair ni >= nj (branch integrals scaled by n^3).
Rational ub3_branch_discrepancy(int n, int ni);
Rational ub4_pair_discrepancy(int n, int ni, int nj);

}  // namespace treeub
