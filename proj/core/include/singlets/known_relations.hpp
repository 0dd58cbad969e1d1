#pragma once

#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/ode.hpp"
#include "singlets/recurrence.hpp"
#include "singlets/truncated_series.hpp"

namespace singlets {

// Recurrences for the SU(2) adjoint singlet counts (Motzkin sums) and the four
// SU(3) components a1..a4. Default seeds are the first terms computed by the
// invariant engine; n_min is the first index where every denominator is nonzero.

/// a(n+1) = n/(n+2) (2 a(n) + 3 a(n-1)); n_min = 1.
RecurrenceSpec motzkin_recurrence(std::vector<BigInt> seeds = {1, 0});

/// Franel numbers: a(n+1) = (7n^2+7n+2)/(n+1)^2 a(n) + 8n^2/(n+1)^2 a(n-1); n_min = 1.
RecurrenceSpec franel_recurrence(std::vector<BigInt> seeds = {1, 2});

/// n_min = 1 (first denominator has a factor n).
RecurrenceSpec a2_recurrence(std::vector<BigInt> seeds = {0, 1});

/// n_min = 2 (n^3 + 4n^2 + n - 6 vanishes at n = 1).
RecurrenceSpec a3_recurrence(std::vector<BigInt> seeds = {0, 0, 2});

/// n_min = 2 (3n^3 - 2n^2 - 7n + 6 vanishes at n = 1).
RecurrenceSpec a4_recurrence(std::vector<BigInt> seeds = {0, 0, 1});

/// (x - 2x^2 - 3x^3) f' + (1 - 3x^2) f = 1
ODESpec su2_ode();
/// x(x+1)(8x-1) f'' + (24x^2 + 14x - 1) f' + 2(4x+1) f = 0
ODESpec a1_ode();
ODESpec a2_ode();
ODESpec a3_ode();
ODESpec a4_ode();

/// Expansion of (-1 + 3x + sqrt(1-2x-3x^2)) / (2x sqrt(1-2x-3x^2)) to x^order.
TruncatedSeries su2_closed_form_series(int order);

}  // namespace singlets
