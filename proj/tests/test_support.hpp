#ifndef DYCK_TEST_SUPPORT_HPP
#define DYCK_TEST_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>

#include "dyck/core.hpp"

namespace dyck::test {

/// Random Dyck number of exactly `bits` binary digits (bits >= 1): digits are
/// drawn from the least significant end, forcing a 1 whenever the running
/// balance is zero, and the top digit is always 1.
inline DyckNumber random_dyck(std::mt19937_64& rng, std::size_t bits) {
    Natural n = 0;
    std::size_t balance = 0;
    for (std::size_t p = 0; p < bits; ++p) {
        const bool one = p + 1 == bits || balance == 0 || (rng() & 1u);
        if (one) {
            boost::multiprecision::bit_set(n, p);
            ++balance;
        } else {
            --balance;
        }
    }
    return DyckNumber(n);
}

inline std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

} // namespace dyck::test

#endif
