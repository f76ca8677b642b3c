#pragma once

#include <functional>

#include "potentials.hpp"

namespace rxpot {

// Direction of a first-order ladder operator built from a superpotential W:
// Annihilate is d/dx + W, Create is -d/dx + W.
enum class OpDirection { Annihilate, Create };

struct FirstOrderOp {
  std::function<double(double)> W;
  OpDirection direction;
};

// Test functions carry their own analytic derivatives so operator identities
// are checked without finite differencing.
struct C1Function {
  std::function<double(double)> f, df;
};

struct C2Function {
  std::function<double(double)> f, df, d2f;
};

// +-f'(x) + W(x) f(x) according to the direction.
double apply_first_order(const FirstOrderOp& op, const C1Function& f, double x);

// z-space operator [beta+alpha - (beta-alpha)z]((z-1) d/dz + alpha + 1)
// + (beta-alpha)(z-1) applied to P_nu^{(alpha+1, beta-1)} at z.  Equals
// -2(alpha-beta)(nu+alpha) Phat_{nu+1}^{(alpha,beta)}(z).
double apply_O(double alpha, double beta, int nu, double z);

// Second-order gluing data for the hyperbolic chain.  p is path independent,
//   p = -B sinh x / (2B cosh x - 2A - 1),
// cbar = -2B on the upper path and +2B on the lower; q follows from the
// constraint q = -p' + p^2 - p''/(2p) + (p'/(2p))^2 - cbar^2/(16 p^2).
struct SSUSYData {
  std::function<double(double)> p, pprime, psecond;
  std::function<double(double)> q;  // rejects points where |p| <= 1e-6
  double cbar;
};

SSUSYData ssusy_data(const FamilyParams& params, Path path);

// Second-order operator applied to f at x:
//   f'' + 2p f' + (2p' + q) f          (adjoint = false)
//   f'' - 2p f' + q f                  (adjoint = true)
double apply_second_order(const SSUSYData& data, const C2Function& f, double x,
                          bool adjoint = false);

// V^{(1,2)} from the closed p formula,
//   -+2p' + p^2 + p''/(2p) - (p'/(2p))^2 + cbar^2/(16 p^2),
// which = 1 takes the minus on 2p', which = 2 the plus.  Same p-vanishing
// restriction as q.
double second_order_potential(const SSUSYData& data, int which, double x);

}  // namespace rxpot
