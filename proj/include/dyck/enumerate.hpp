#ifndef DYCK_ENUMERATE_HPP
#define DYCK_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <stdexcept>
#include <vector>

#include "dyck/core.hpp"

namespace dyck {

// Ranges group Dyck numbers by bit-length: R_k holds the Dyck numbers with
// exactly k binary digits, from mersenne_successor(k - 1) up to mersenne(k).
// R_0 = {0} is only produced on explicit request.

struct RangeStats {
    std::size_t k = 0;
    DyckNumber first;
    DyckNumber last;
    Natural size = 0;     // counted by successor iteration
    Natural expected = 0; // central_binomial(k - 1)
    bool matches = false;
};

struct ConjectureReport {
    std::vector<RangeStats> ranges;

    bool all_match() const;
};

/// Position in the sequence 0, 1, 3, 5, 7, 11, ... with 1-based ordinals,
/// a(1) = 0.
class SequenceCursor {
public:
    SequenceCursor() = default;
    SequenceCursor(DyckNumber current, std::uint64_t ordinal);

    /// Cursor on the i-th term.
    static SequenceCursor at(std::uint64_t ordinal);

    const DyckNumber& current() const noexcept { return current_; }
    std::uint64_t ordinal() const noexcept { return ordinal_; }

    void advance();

private:
    DyckNumber current_;
    std::uint64_t ordinal_ = 1;
};

/// Unbounded lazy stream start, DS(start), DS(DS(start)), ...
class SuccessorStream : public std::ranges::view_interface<SuccessorStream> {
public:
    class iterator {
    public:
        using value_type = DyckNumber;
        using difference_type = std::ptrdiff_t;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(DyckNumber start) : current_(std::move(start)) {}

        const DyckNumber& operator*() const noexcept { return current_; }
        const DyckNumber* operator->() const noexcept { return &current_; }
        iterator& operator++() {
            current_ = successor(current_);
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator&, std::default_sentinel_t) noexcept { return false; }

    private:
        DyckNumber current_;
    };

    SuccessorStream() = default;
    explicit SuccessorStream(DyckNumber start) : start_(std::move(start)) {}

    iterator begin() const { return iterator(start_); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    DyckNumber start_;
};

SuccessorStream iter_from(DyckNumber start);

/// C(m, floor(m / 2)), exact.
Natural central_binomial(std::size_t m);

/// Calls fn(const DyckNumber&) for each member of R_k in ascending order
/// without materializing the range. k = 0 requires include_zero_range.
template <class Fn>
void for_each_in_range(std::size_t k, Fn&& fn, bool include_zero_range = false) {
    if (k == 0) {
        if (!include_zero_range) {
            throw std::invalid_argument("range 0 requires include_zero_range");
        }
        fn(DyckNumber{});
        return;
    }
    const DyckNumber last = mersenne(k);
    DyckNumber d = mersenne_successor(k - 1);
    while (true) {
        fn(static_cast<const DyckNumber&>(d));
        if (d == last) {
            break;
        }
        d = successor(d);
    }
}

std::vector<DyckNumber> range_terms(std::size_t k, bool include_zero_range = false);

/// |R_k| by successor iteration.
Natural count_range(std::size_t k);

RangeStats range_stats(std::size_t k);

/// range_stats for k = 1..max_k, serially. See verify_conjecture_parallel.
ConjectureReport verify_conjecture(std::size_t max_k);

/// How term_at / index_of locate the target range.
enum class IndexStrategy {
    /// Skip whole ranges using central binomial range sizes, then iterate
    /// inside the target range. Falls back to `iterate` (with a warning on
    /// std::clog) if the landing term is not in the expected range.
    skip_ranges,
    /// Walk the successor chain from 0. Exact without any assumption.
    iterate,
};

/// i-th term, 1-based, a(1) = 0. Throws std::out_of_range for i = 0.
DyckNumber term_at(std::uint64_t i, IndexStrategy strategy = IndexStrategy::skip_ranges);

/// Inverse of term_at.
std::uint64_t index_of(const DyckNumber& d, IndexStrategy strategy = IndexStrategy::skip_ranges);

} // namespace dyck

#endif
