#include "numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace rxpot {

namespace {

// Eigenvalue count below x via the Sturm sequence.  The pivot is clamped to
// -pivmin before its sign is tested; a pivot that lands on zero counts as a
// crossing, otherwise it would be missed (clean constant-diagonal matrices
// can hit zero exactly).
int sturm_count(const TridiagonalOperator& t, double x, double pivmin) {
  int count = 0;
  double q = t.diagonal[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  const int m = static_cast<int>(t.diagonal.size());
  for (int i = 1; i < m; ++i) {
    q = t.diagonal[i] - x - t.off_diagonal[i - 1] * t.off_diagonal[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// Tridiagonal solve (T - shift) v = b by LU with partial pivoting; the
// pivoted factorization fills a second superdiagonal.
void shifted_solve(const TridiagonalOperator& t, double shift,
                   std::vector<double>& v) {
  const int m = static_cast<int>(t.diagonal.size());
  std::vector<double> a(m), b(m - 1 > 0 ? m - 1 : 0), c(m - 1 > 0 ? m - 1 : 0),
      d(m > 2 ? m - 2 : 0, 0.0);
  for (int i = 0; i < m; ++i) a[i] = t.diagonal[i] - shift;
  for (int i = 0; i + 1 < m; ++i) b[i] = c[i] = t.off_diagonal[i];
  const double tiny = std::numeric_limits<double>::min() /
                      std::numeric_limits<double>::epsilon();
  for (int i = 0; i + 1 < m; ++i) {
    if (std::abs(b[i]) > std::abs(a[i])) {
      std::swap(a[i], b[i]);
      std::swap(c[i], a[i + 1]);
      if (i + 2 < m) {
        d[i] = c[i + 1];
        c[i + 1] = 0.0;
      }
      std::swap(v[i], v[i + 1]);
    }
    if (std::abs(a[i]) < tiny) a[i] = (a[i] < 0.0 ? -tiny : tiny);
    const double l = b[i] / a[i];
    a[i + 1] -= l * c[i];
    if (i + 2 < m) c[i + 1] -= l * d[i];
    v[i + 1] -= l * v[i];
  }
  if (std::abs(a[m - 1]) < tiny) a[m - 1] = (a[m - 1] < 0.0 ? -tiny : tiny);
  v[m - 1] /= a[m - 1];
  if (m >= 2) {
    v[m - 2] = (v[m - 2] - c[m - 2] * v[m - 1]) / a[m - 2];
    for (int i = m - 3; i >= 0; --i)
      v[i] = (v[i] - c[i] * v[i + 1] - d[i] * v[i + 2]) / a[i];
  }
}

void normalize_with_sign(std::vector<double>& v) {
  double norm = 0.0, big = 0.0;
  for (double x : v) {
    norm += x * x;
    if (std::abs(x) > std::abs(big)) big = x;
  }
  norm = std::sqrt(norm);
  const double s = (big < 0.0 ? -1.0 : 1.0) / norm;
  for (double& x : v) x *= s;
}

double matvec_residual(const TridiagonalOperator& t, double lambda,
                       const std::vector<double>& v) {
  const int m = static_cast<int>(v.size());
  double r2 = 0.0;
  for (int i = 0; i < m; ++i) {
    double r = (t.diagonal[i] - lambda) * v[i];
    if (i > 0) r += t.off_diagonal[i - 1] * v[i - 1];
    if (i + 1 < m) r += t.off_diagonal[i] * v[i + 1];
    r2 += r * r;
  }
  return std::sqrt(r2);
}

}  // namespace

Grid make_grid(double x_lo, double x_hi, int n, double inset) {
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !std::isfinite(inset) ||
      inset < 0.0)
    throw std::invalid_argument("make_grid: non-finite bounds or bad inset");
  Grid g{x_lo + inset, x_hi - inset, n, inset};
  if (!(g.x_lo < g.x_hi))
    throw std::invalid_argument("make_grid: requires x_lo < x_hi after inset");
  if (n < 3) throw std::invalid_argument("make_grid: requires n >= 3");
  return g;
}

TridiagonalOperator build_hamiltonian(const PotentialEvaluator& potential,
                                      const Grid& grid) {
  const int m = grid.interior();
  const double h2 = grid.h() * grid.h();
  TridiagonalOperator t;
  t.diagonal.resize(m);
  t.off_diagonal.assign(m > 1 ? m - 1 : 0, -1.0 / h2);
  for (int i = 0; i < m; ++i) {
    const double x = grid.node(i + 1);
    if (!potential.domain.contains(x))
      throw std::domain_error("build_hamiltonian: grid node outside domain");
    const double v = potential.value(x);
    if (!std::isfinite(v))
      throw std::invalid_argument(
          "build_hamiltonian: potential not finite at a grid node");
    t.diagonal[i] = 2.0 / h2 + v;
  }
  return t;
}

std::vector<EigenResult> eigen_lowest_k(const TridiagonalOperator& op, int k) {
  const int m = static_cast<int>(op.diagonal.size());
  if (k < 1 || k > m)
    throw std::invalid_argument("eigen_lowest_k: requires 1 <= k <= size");
  // Gershgorin bracket
  double lo = op.diagonal[0], hi = op.diagonal[0], max_off2 = 0.0;
  for (int i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < m) r += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - r);
    hi = std::max(hi, op.diagonal[i] + r);
    if (i + 1 < m)
      max_off2 = std::max(max_off2, op.off_diagonal[i] * op.off_diagonal[i]);
  }
  const double safmin = std::numeric_limits<double>::min();
  const double pivmin = std::max(safmin, safmin * max_off2);
  const double tol = 1e-10;
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<EigenResult> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    int iter = 0;
    while (b - a > std::max(tol, 2.0 * eps * std::max(std::abs(a), std::abs(b)))) {
      if (++iter > 200)
        throw NoConvergence("eigen_lowest_k: bisection did not converge");
      const double mid = 0.5 * (a + b);
      if (sturm_count(op, mid, pivmin) >= j + 1)
        b = mid;
      else
        a = mid;
    }
    const double lambda = 0.5 * (a + b);

    EigenResult er;
    er.value = lambda;
    er.vector.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
    const double scale = std::max(std::abs(lo), std::abs(hi));
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      shifted_solve(op, lambda, er.vector);
      normalize_with_sign(er.vector);
      if (matvec_residual(op, lambda, er.vector) <=
          1e-10 * std::max(1.0, scale)) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NoConvergence("eigen_lowest_k: inverse iteration did not converge");
    out.push_back(std::move(er));
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw std::invalid_argument("integrate: requires finite a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
  // Simpson via trapezoid doubling: S(2n) = (4 T(2n) - T(n)) / 3
  int n = 8;
  double h = (b - a) / n;
  double trap = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) trap += f(a + i * h);
  trap *= h;
  double simpson = std::numeric_limits<double>::quiet_NaN();
  for (int level = 0; level < 20; ++level) {
    double mids = 0.0;
    for (int i = 0; i < n; ++i) mids += f(a + (i + 0.5) * h);
    const double trap2 = 0.5 * trap + 0.5 * h * mids;
    const double simpson2 = (4.0 * trap2 - trap) / 3.0;
    if (level > 0 && std::abs(simpson2 - simpson) < tol) return simpson2;
    simpson = simpson2;
    trap = trap2;
    n *= 2;
    h *= 0.5;
  }
  throw NoConvergence("integrate: max refinement reached");
}

double convergence_order(double e_n, double e_2n, double e_4n) {
  const double d1 = e_2n - e_n;
  const double d2 = e_4n - e_2n;
  if (d1 == 0.0 || d2 == 0.0 || (d1 > 0.0) != (d2 > 0.0))
    throw std::invalid_argument(
        "convergence_order: order undefined for this sequence");
  return std::log2(std::abs(d1) / std::abs(d2));
}

double residual_norm(const PotentialEvaluator& potential,
                     const std::function<double(double)>& psi,
                     const std::function<double(double)>& psi_dd, double E,
                     const Grid& grid) {
  double r2 = 0.0, p2 = 0.0;
  for (int i = 1; i + 1 < grid.n; ++i) {
    const double x = grid.node(i);
    const double p = psi(x);
    const double r = -psi_dd(x) + (potential.value(x) - E) * p;
    r2 += r * r;
    p2 += p * p;
  }
  return std::sqrt(r2 / p2);
}

Grid default_grid(const DomainDescriptor& domain, int n) {
  switch (domain.kind) {
    case DomainKind::HalfLine:
      return make_grid(1e-4, 25.0, n);
    case DomainKind::OpenInterval:
      return make_grid(domain.lo, domain.hi, n, 1e-6);
    case DomainKind::RealLine:
      return make_grid(-25.0, 25.0, n);
  }
  throw std::invalid_argument("default_grid: unknown domain kind");
}

std::vector<double> family_spectrum(const FamilyParams& params, int grid_n,
                                    int k) {
  const ValidityReport v = validate_params(params);
  if (v.cls == ParamClass::Invalid)
    throw std::invalid_argument("family_spectrum: " + v.detail);
  const PotentialEvaluator pot = make_evaluator(params);
  const Grid grid = default_grid(pot.domain, grid_n);
  const TridiagonalOperator op = build_hamiltonian(pot, grid);
  std::vector<double> out;
  out.reserve(k);
  for (const auto& er : eigen_lowest_k(op, k)) out.push_back(er.value);
  return out;
}

double residual_norm(const PotentialEvaluator& potential,
                     const std::function<double(double)>& psi, double E,
                     const Grid& grid) {
  const double h = grid.h();
  double r2 = 0.0, p2 = 0.0;
  for (int i = 2; i + 2 < grid.n; ++i) {
    const double x = grid.node(i);
    const double p = psi(x);
    const double dd = (-psi(x - 2.0 * h) + 16.0 * psi(x - h) - 30.0 * p +
                       16.0 * psi(x + h) - psi(x + 2.0 * h)) /
                      (12.0 * h * h);
    const double r = -dd + (potential.value(x) - E) * p;
    r2 += r * r;
    p2 += p * p;
  }
  return std::sqrt(r2 / p2);
}

}  // namespace rxpot
