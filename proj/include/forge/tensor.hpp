#pragma once

#include "forge/matrix.hpp"

#include <cstdint>
#include <vector>

namespace forge {

/// (-1)^e as a field element.
Scalar sign_of(const Field& F, long long e);

/// Parity of sum_{i<n} (n-i)*d_i — the sign exponent of applying the inverse
/// n-fold shift slotwise to a word of (shifted) degrees d_1..d_n.
long long slotwise_shift_exponent(const std::vector<int>& degs);

/// n(n+1)/2 — the sign exponent relating (s^{(x)n})^{-1} to (s^{-1})^{(x)n}.
long long shift_collation_exponent(int n);

}  // namespace forge
