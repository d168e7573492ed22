#pragma once

#include "hyerslab/types.hpp"

namespace hyerslab {

/// phi(x_1..x_{n+1}) = eps ||x_1||^r ... ||x_{n-1}||^r (||x_n||^r + ||x_{n+1}||^r).
/// For n = 1 the product prefix is empty. Zero convention as in power_norm.
struct PowerControl {
  int n = 1;  // arity of g; phi takes n + 1 points
  double eps = 1.0;
  double r = 0.0;
};

double evaluate_control(const PowerControl& phi, const Tuple& z);

/// r_n phi(y), summed literally term by term:
///   sum_{j=0}^{n-1} 2^j phi(2x_1..2x_{n-1-j}, x_n, x_{n-1}..x_{n-j+1}, x_{n-j}, x_{n-j})
/// and phi(x_1, x_1) for n = 1.
double fold_control(const PowerControl& phi, const Tuple& y);

/// kappa(n, r) = sum_{j=0}^{n-1} 2^{(n-1-j) r + j + 1}, as a literal finite sum.
double kappa(int n, double r);

/// Coefficient printed for r_n phi in the power-control corollary:
/// 2^{(n-1)(r-1)+1} (2^{nr} - 2^n) / (2^r - 2). Undefined (NaN) at r = 1.
double printed_fold_coefficient(int n, double r);

/// C(n, r) = kappa(n, r) / |2^n - 2^{nr}|. Throws ThresholdError at r = 1.
double stability_constant(int n, double r);

/// 2^{(n-1)(r-1)+1} / |2^r - 2|, the constant printed with the corollary's bound.
double printed_stability_constant(int n, double r);

/// Throws DivergentControl unless the stabilizer series of phi converges in
/// the requested branch (Plus: r < 1, Minus: r > 1).
void require_convergent(const PowerControl& phi, Mode mode);

/// k-th summand of R_n^{+/-} phi(y):
///   Plus:  2^{-n(k+1)} r_n phi(2^k y)
///   Minus: 2^{nk} r_n phi(2^{-k-1} y)
double stabilizer_term(const PowerControl& phi, const Tuple& y, Mode mode, int k);

/// Upper bound q < 1 on term(k+1) / term(k), valid for every k.
double stabilizer_ratio_bound(const PowerControl& phi, const Tuple& y, Mode mode);

/// Bound on sum_{j >= k} term(j), evaluated as term(k) / (1 - q).
/// Exact when every coordinate factor scales homogeneously.
double stabilizer_tail(const PowerControl& phi, const Tuple& y, Mode mode, int k);

struct SeriesValue {
  double value = 0.0;       // partial sum over k_terms summands
  double tail_bound = 0.0;  // bound on the remainder
  double total() const { return value + tail_bound; }
};

SeriesValue stabilizer_series(const PowerControl& phi, const Tuple& y, Mode mode, int k_terms);

/// Plus: r_n phi(y) / (2^n - 2^{nr}); Minus: r_n phi(y) / (2^{nr} - 2^n).
double stabilizer_closed_form(const PowerControl& phi, const Tuple& y, Mode mode);

}  // namespace hyerslab
