#ifndef DYCK_PARALLEL_HPP
#define DYCK_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyck/enumerate.hpp"

// OpenMP versions of the exhaustive sweeps. Each kernel has a serial
// counterpart (verify_conjecture, oracle::brute_range, or the Execution::serial
// path below) that tests hold it against. Results never depend on the thread
// count or schedule.

namespace dyck::parallel {

enum class Execution { serial, parallel };

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

/// Same result as verify_conjecture; ranges are counted concurrently.
ConjectureReport verify_conjecture_parallel(std::size_t max_k);

/// Same result as oracle::brute_range; candidates are split into chunks.
std::vector<DyckNumber> brute_range_parallel(std::size_t k, bool allow_large = false);

struct SweepResult {
    /// Dyck numbers examined.
    std::uint64_t checked = 0;
    /// Smallest Dyck number that failed the check, if any.
    std::optional<Natural> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

/// For every Dyck number d < 2^limit_bits: successor(d) equals
/// oracle::brute_successor(d).
SweepResult sweep_successor_agreement(std::size_t limit_bits, Execution exec = Execution::parallel);

/// For every Dyck number d < 2^limit_bits: oracle::kasa_zero_bounds(d).
SweepResult sweep_kasa_bounds(std::size_t limit_bits, Execution exec = Execution::parallel);

/// For every Dyck number d < 2^limit_bits: from_dyck_word(to_dyck_word(d)) == d.
SweepResult sweep_codec_roundtrip(std::size_t limit_bits, Execution exec = Execution::parallel);

} // namespace dyck::parallel

#endif
