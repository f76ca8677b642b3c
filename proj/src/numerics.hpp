#pragma once

#include <functional>
#include <vector>

#include "potentials.hpp"

namespace rxpot {

// Uniform grid, n total nodes including both Dirichlet endpoints.
struct Grid {
  double x_lo, x_hi;
  int n;
  double inset = 0.0;  // endpoint inset already folded into x_lo/x_hi
  double h() const { return (x_hi - x_lo) / (n - 1); }
  double node(int i) const { return x_lo + i * h(); }
  int interior() const { return n - 2; }
};

// Applies the inset to both endpoints and validates x_lo < x_hi, n >= 3.
Grid make_grid(double x_lo, double x_hi, int n, double inset = 0.0);

// Symmetric tridiagonal matrix over the interior nodes of a grid.
struct TridiagonalOperator {
  std::vector<double> diagonal;      // size m
  std::vector<double> off_diagonal;  // size m-1
};

struct EigenResult {
  double value;
  std::vector<double> vector;  // interior-node samples, unit 2-norm
};

// 3-point discretization of -d^2/dx^2 + V with Dirichlet ends:
// diagonal 2/h^2 + V(x_i), off-diagonal -1/h^2.
TridiagonalOperator build_hamiltonian(const PotentialEvaluator& potential,
                                      const Grid& grid);

// k smallest eigenpairs by Sturm-sequence bisection (absolute tolerance
// 1e-10) and inverse iteration.  Deterministic; the largest-magnitude
// component of each vector is made positive.  Throws NoConvergence at the
// iteration cap.
std::vector<EigenResult> eigen_lowest_k(const TridiagonalOperator& op, int k);

// Composite Simpson with interval halving until successive estimates differ
// by less than tol.  Throws NoConvergence at max refinement.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

// Richardson order estimate log2((e_2n - e_n)/(e_4n - e_2n)) from the same
// quantity at three grid refinements.  Throws if the differences vanish or
// change sign (order undefined).
double convergence_order(double e_n, double e_2n, double e_4n);

// ||(-psi'' + (V - E) psi)||_2 / ||psi||_2 over interior nodes, with the
// analytic second derivative supplied by the caller.
double residual_norm(const PotentialEvaluator& potential,
                     const std::function<double(double)>& psi,
                     const std::function<double(double)>& psi_dd, double E,
                     const Grid& grid);

// Same norm with psi'' replaced by the 4th-order 5-point stencil on the grid
// (nodes whose stencil fits inside the grid).
double residual_norm(const PotentialEvaluator& potential,
                     const std::function<double(double)>& psi, double E,
                     const Grid& grid);

// Default verification grid per domain shape: half-line truncated to
// [1e-4, 25], finite intervals inset by 1e-6, the real line to [-25, 25].
Grid default_grid(const DomainDescriptor& domain, int n);

// k lowest eigenvalues of the discretized family Hamiltonian on the default
// grid.  Validates the parameter ranges; complex families are rejected.
std::vector<double> family_spectrum(const FamilyParams& params, int grid_n,
                                    int k);

}  // namespace rxpot
