#include "dyck/oracle.hpp"

#include <string>

namespace dyck::oracle {

bool satisfies_suffix_rule(const Natural& n) {
    const std::string digits = to_binary(n);
    if (digits == "0") {
        return true;
    }
    std::size_t ones = 0;
    std::size_t zeros = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it == '1') {
            ++ones;
        } else {
            ++zeros;
        }
        if (zeros > ones) {
            return false;
        }
    }
    return true;
}

DyckNumber brute_successor(const DyckNumber& d) {
    if (d.is_zero()) {
        return detail::trusted(1);
    }
    Natural m = d.value() + 2;
    while (!satisfies_suffix_rule(m)) {
        m += 2;
    }
    return detail::trusted(std::move(m));
}

std::vector<DyckNumber> brute_range(std::size_t k, bool allow_large) {
    if (k == 0) {
        throw std::invalid_argument("brute_range starts at k = 1");
    }
    if (k > kMaxBruteRangeK && !allow_large) {
        throw ScanGuardError("brute_range refuses k = " + std::to_string(k) + " (guard is " +
                             std::to_string(kMaxBruteRangeK) + ")");
    }
    std::vector<DyckNumber> terms;
    const Natural end = pow2(k);
    for (Natural n = pow2(k - 1) | 1; n < end; n += 2) {
        if (satisfies_suffix_rule(n)) {
            terms.push_back(detail::trusted(n));
        }
    }
    return terms;
}

bool kasa_zero_bounds(const DyckNumber& d) {
    const std::string bits = to_binary(d.value());
    std::size_t n = 0;
    for (char c : bits) {
        n += c == '1' ? 1 : 0;
    }
    if (n == 0) {
        return true;
    }
    const std::string padded = std::string(2 * n - bits.size(), '0') + bits;
    std::size_t i = 0;
    for (std::size_t pos = 0; pos < padded.size(); ++pos) {
        if (padded[padded.size() - 1 - pos] != '0') {
            continue;
        }
        ++i;
        if (pos < 2 * i - 1 || pos > n + i - 1) {
            return false;
        }
    }
    return i == n;
}

} // namespace dyck::oracle
