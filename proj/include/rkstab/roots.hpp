#pragma once

#include <functional>

#include "rkstab/poly.hpp"

namespace rkstab {

struct RootResult {
  double value = 0.0;
  Interval bracket{-1.0, 0.0};
  int iterations = 0;
  double residual = 0.0;
  /// max(1, |f| at the bracket ends); residuals are judged relative to it.
  double scale = 1.0;
  /// Set when no sign change exists and the root was located as a local
  /// minimum of |f| (even-multiplicity roots).
  bool residual_only = false;
};

using ScalarFn = std::function<double(double)>;

/// Root of f in [lower_hint, 0) assuming exactly one sign change there.
/// lower_hint is doubled until the bracket straddles a sign change; if it
/// never does, throws NoSignChange. Bisection then Newton polish. Without an
/// analytic derivative Newton uses central differences with h = 1e-6.
RootResult unique_negative_root(const ScalarFn& f, double lower_hint,
                                const ScalarFn& df = nullptr);
RootResult unique_negative_root(const Poly& p, double lower_hint);

/// -(b n! - (m-n+1)_n)^(1/n) - 2m + (1 + (-1)^n): a lower estimate for the
/// negative root of L_n^(-m-1)(x) = b (b >= C(m,n)).
double mu_bound(int m, int n, double b);

/// Most negative real root of p in [search_lo, 0). The window is split at
/// the critical points of p (found recursively from its derivatives) into
/// monotone pieces, scanned from the left; a critical point where p vanishes
/// is reported as an even-multiplicity root with residual_only set. Throws
/// NoRootFound when there is no root in the window.
RootResult smallest_negative_root(const Poly& p, double search_lo);

}  // namespace rkstab
