#include "dyck/enumerate.hpp"

#include <algorithm>
#include <iostream>

namespace dyck {

bool ConjectureReport::all_match() const {
    return std::all_of(ranges.begin(), ranges.end(), [](const RangeStats& s) { return s.matches; });
}

SequenceCursor::SequenceCursor(DyckNumber current, std::uint64_t ordinal)
    : current_(std::move(current)), ordinal_(ordinal) {
    if (ordinal_ == 0) {
        throw std::out_of_range("sequence ordinals start at 1");
    }
}

SequenceCursor SequenceCursor::at(std::uint64_t ordinal) { return {term_at(ordinal), ordinal}; }

void SequenceCursor::advance() {
    current_ = successor(current_);
    ++ordinal_;
}

SuccessorStream iter_from(DyckNumber start) { return SuccessorStream(std::move(start)); }

Natural central_binomial(std::size_t m) {
    // C(m, j) built up one factor at a time; every intermediate is an integer.
    const std::size_t j = m / 2;
    Natural c = 1;
    for (std::size_t i = 1; i <= j; ++i) {
        c *= m - j + i;
        c /= i;
    }
    return c;
}

std::vector<DyckNumber> range_terms(std::size_t k, bool include_zero_range) {
    std::vector<DyckNumber> terms;
    for_each_in_range(k, [&](const DyckNumber& d) { terms.push_back(d); }, include_zero_range);
    return terms;
}

Natural count_range(std::size_t k) {
    if (k == 0) {
        return 1;
    }
    std::uint64_t count = 0;
    for_each_in_range(k, [&](const DyckNumber&) { ++count; });
    return count;
}

RangeStats range_stats(std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("range statistics start at k = 1");
    }
    RangeStats stats;
    stats.k = k;
    stats.first = mersenne_successor(k - 1);
    stats.last = mersenne(k);
    stats.size = count_range(k);
    stats.expected = central_binomial(k - 1);
    stats.matches = stats.size == stats.expected;
    return stats;
}

ConjectureReport verify_conjecture(std::size_t max_k) {
    if (max_k == 0) {
        throw std::invalid_argument("max_k must be at least 1");
    }
    ConjectureReport report;
    report.ranges.reserve(max_k);
    for (std::size_t k = 1; k <= max_k; ++k) {
        report.ranges.push_back(range_stats(k));
    }
    return report;
}

namespace {

DyckNumber term_at_by_iteration(std::uint64_t i) {
    DyckNumber d;
    for (std::uint64_t n = 1; n < i; ++n) {
        d = successor(d);
    }
    return d;
}

std::uint64_t index_of_by_iteration(const DyckNumber& target) {
    DyckNumber d;
    std::uint64_t index = 1;
    while (d < target) {
        d = successor(d);
        ++index;
    }
    return index;
}

} // namespace

DyckNumber term_at(std::uint64_t i, IndexStrategy strategy) {
    if (i == 0) {
        throw std::out_of_range("sequence ordinals start at 1");
    }
    if (strategy == IndexStrategy::iterate || i == 1) {
        return term_at_by_iteration(i);
    }
    // Position among the non-zero terms, 1-based.
    Natural remaining = i - 1;
    std::size_t k = 1;
    for (Natural size = central_binomial(0); remaining > size; size = central_binomial(k - 1)) {
        remaining -= size;
        ++k;
    }
    DyckNumber d = mersenne_successor(k - 1);
    const auto steps = static_cast<std::uint64_t>(remaining - 1);
    for (std::uint64_t s = 0; s < steps && d.bit_length() == k; ++s) {
        d = successor(d);
    }
    if (d.bit_length() != k) {
        std::clog << "warning: range " << k
                  << " is smaller than its central binomial size; falling back to iteration\n";
        return term_at_by_iteration(i);
    }
    return d;
}

std::uint64_t index_of(const DyckNumber& d, IndexStrategy strategy) {
    if (strategy == IndexStrategy::iterate || d.is_zero()) {
        return index_of_by_iteration(d);
    }
    const std::size_t k = d.bit_length();
    Natural index = 1;
    for (std::size_t j = 1; j < k; ++j) {
        index += central_binomial(j - 1);
    }
    DyckNumber walk = mersenne_successor(k - 1);
    index += 1;
    while (walk < d) {
        walk = successor(walk);
        index += 1;
    }
    return static_cast<std::uint64_t>(index);
}

} // namespace dyck
