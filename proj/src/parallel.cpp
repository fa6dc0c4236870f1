#include "dyck/parallel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dyck/oracle.hpp"

namespace dyck::parallel {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ConjectureReport verify_conjecture_parallel(std::size_t max_k) {
    if (max_k == 0) {
        throw std::invalid_argument("max_k must be at least 1");
    }
    ConjectureReport report;
    report.ranges.resize(max_k);
    const auto n = static_cast<std::int64_t>(max_k);
    // Largest ranges first so the long counts start early.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = n - 1; i >= 0; --i) {
        report.ranges[static_cast<std::size_t>(i)] = range_stats(static_cast<std::size_t>(i) + 1);
    }
    return report;
}

namespace {

constexpr std::uint64_t kChunk = 1 << 12;

// Splits the odd numbers of [lo, hi) into chunks of kChunk candidates.
std::vector<std::pair<Natural, Natural>> odd_chunks(const Natural& lo, const Natural& hi) {
    std::vector<std::pair<Natural, Natural>> chunks;
    for (Natural start = lo | 1; start < hi; start += 2 * kChunk) {
        chunks.emplace_back(start, std::min<Natural>(start + 2 * kChunk, hi));
    }
    return chunks;
}

SweepResult sweep(std::size_t limit_bits, Execution exec, const std::function<bool(const DyckNumber&)>& check) {
    SweepResult result;
    result.checked = 1;
    if (!check(DyckNumber{})) {
        result.first_failure = Natural(0);
        return result;
    }
    const auto chunks = odd_chunks(1, pow2(limit_bits));
    const auto count = static_cast<std::int64_t>(chunks.size());
    std::vector<std::uint64_t> checked(chunks.size(), 0);
    std::vector<std::optional<Natural>> failures(chunks.size());

    auto run_chunk = [&](std::int64_t c) {
        const auto idx = static_cast<std::size_t>(c);
        const auto& [lo, hi] = chunks[idx];
        for (Natural n = lo; n < hi; n += 2) {
            if (!is_dyck_number(n)) {
                continue;
            }
            ++checked[idx];
            if (!check(detail::trusted(n))) {
                failures[idx] = n;
                return;
            }
        }
    };

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < count; ++c) {
            run_chunk(c);
        }
    } else {
        for (std::int64_t c = 0; c < count; ++c) {
            run_chunk(c);
        }
    }

    for (std::size_t c = 0; c < chunks.size(); ++c) {
        result.checked += checked[c];
        if (failures[c] && !result.first_failure) {
            result.first_failure = failures[c];
        }
    }
    return result;
}

} // namespace

std::vector<DyckNumber> brute_range_parallel(std::size_t k, bool allow_large) {
    if (k == 0) {
        throw std::invalid_argument("brute_range starts at k = 1");
    }
    if (k > oracle::kMaxBruteRangeK && !allow_large) {
        throw oracle::ScanGuardError("brute_range refuses k = " + std::to_string(k));
    }
    const auto chunks = odd_chunks(pow2(k - 1), pow2(k));
    const auto count = static_cast<std::int64_t>(chunks.size());
    std::vector<std::vector<DyckNumber>> partial(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < count; ++c) {
        const auto idx = static_cast<std::size_t>(c);
        for (Natural n = chunks[idx].first; n < chunks[idx].second; n += 2) {
            if (oracle::satisfies_suffix_rule(n)) {
                partial[idx].push_back(detail::trusted(n));
            }
        }
    }
    std::vector<DyckNumber> terms;
    for (auto& p : partial) {
        terms.insert(terms.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return terms;
}

SweepResult sweep_successor_agreement(std::size_t limit_bits, Execution exec) {
    return sweep(limit_bits, exec,
                 [](const DyckNumber& d) { return successor(d) == oracle::brute_successor(d); });
}

SweepResult sweep_kasa_bounds(std::size_t limit_bits, Execution exec) {
    return sweep(limit_bits, exec, [](const DyckNumber& d) { return oracle::kasa_zero_bounds(d); });
}

SweepResult sweep_codec_roundtrip(std::size_t limit_bits, Execution exec) {
    return sweep(limit_bits, exec, [](const DyckNumber& d) { return from_dyck_word(to_dyck_word(d)) == d; });
}

} // namespace dyck::parallel
