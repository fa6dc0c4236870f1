#ifndef DYCK_ORACLE_HPP
#define DYCK_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dyck/core.hpp"

// Brute-force reference implementations. Deliberately naive and independent
// of the closed-form successor: they only use the suffix-balance predicate
// (re-implemented here) and linear scans.

namespace dyck::oracle {

/// Largest k brute_range scans without an explicit override.
inline constexpr std::size_t kMaxBruteRangeK = 24;

/// Default bound (as a power of two) for exhaustive successor sweeps.
inline constexpr std::size_t kSweepLimitBits = 18;

class ScanGuardError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Suffix-balance check counting 1s and 0s separately over a digit string.
bool satisfies_suffix_rule(const Natural& n);

/// Smallest Dyck number above d, by scanning d+2, d+4, ... (1 for d = 0).
DyckNumber brute_successor(const DyckNumber& d);

/// All odd n in [2^(k-1), 2^k) passing the suffix rule, ascending. Throws
/// ScanGuardError when k > kMaxBruteRangeK unless allow_large is set.
std::vector<DyckNumber> brute_range(std::size_t k, bool allow_large = false);

/// Checks 2i - 1 <= z_i <= n + i - 1 for the position z_i of the i-th zero
/// (from the right) in d padded to 2n digits, n = popcount(d).
bool kasa_zero_bounds(const DyckNumber& d);

} // namespace dyck::oracle

#endif
