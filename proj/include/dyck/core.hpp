#ifndef DYCK_CORE_HPP
#define DYCK_CORE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/natural.hpp"

namespace dyck {

// ============================================================================
// Errors
// ============================================================================

/// Raised when a natural number fails the suffix-balance rule. Carries the
/// shortest suffix of the binary expansion holding more 0s than 1s.
class NotDyckNumberError : public std::domain_error {
public:
    NotDyckNumberError(const Natural& value, std::size_t suffix_length);

    const Natural& value() const noexcept { return value_; }
    std::size_t suffix_length() const noexcept { return suffix_length_; }
    /// The offending suffix as binary digits, e.g. "001" for 9.
    std::string violating_suffix() const;

private:
    Natural value_;
    std::size_t suffix_length_;
};

class NotDyckWordError : public std::invalid_argument {
public:
    NotDyckWordError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    /// Step index (0-based) at which the word was found invalid.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// ============================================================================
// Membership
// ============================================================================

/// Length of the shortest suffix of n's binary expansion with more 0s than
/// 1s, or nullopt if there is none. Single LSB-to-MSB pass.
std::optional<std::size_t> find_suffix_violation(const Natural& n);

/// True iff every suffix of the binary expansion of n has #1 >= #0.
/// Zero (the empty path) is a Dyck number.
bool is_dyck_number(const Natural& n);

// ============================================================================
// Value types
// ============================================================================

class DyckNumber;

namespace detail {
// Construction without re-validation, reserved for operations whose result
// is a Dyck number by construction.
DyckNumber trusted(Natural value);
} // namespace detail

/// A natural number satisfying the suffix-balance rule. The invariant is
/// checked once, on construction; default-constructed value is 0.
class DyckNumber {
public:
    DyckNumber() = default;

    /// Throws NotDyckNumberError if value is not a Dyck number.
    explicit DyckNumber(Natural value);

    const Natural& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    std::size_t bit_length() const { return dyck::bit_length(value_); }

    friend bool operator==(const DyckNumber& a, const DyckNumber& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const DyckNumber& a, const DyckNumber& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const DyckNumber& d) { return os << d.value_; }

private:
    struct TrustedTag {};
    DyckNumber(TrustedTag, Natural value) : value_(std::move(value)) {}
    friend DyckNumber detail::trusted(Natural value);

    Natural value_{0};
};

enum class Step : char { up = 'U', down = 'D' };

/// Balanced sequence of Up/Down steps in which no prefix has more Downs than
/// Ups. The empty word is valid.
class DyckWord {
public:
    DyckWord() = default;

    /// Throws NotDyckWordError if steps break either balance rule.
    explicit DyckWord(std::vector<Step> steps);

    /// Parses letters U/D, optionally with run exponents: "UUDD", "U^2D^2"
    /// and "U2D2" are the same word. Whitespace is ignored.
    static DyckWord parse(std::string_view text);

    std::span<const Step> steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    std::size_t semilength() const noexcept { return steps_.size() / 2; }
    bool empty() const noexcept { return steps_.empty(); }

    /// Plain letter form, e.g. "UUDUDD".
    std::string to_string() const;
    /// Run-length form, e.g. "U^2DUD^2".
    std::string to_run_length_string() const;

    friend bool operator==(const DyckWord&, const DyckWord&) = default;

private:
    std::vector<Step> steps_;
};

/// Per-digit heights, least significant digit first. heights[p] is the number
/// of 1s minus the number of 0s at positions 0..p.
struct HeightProfile {
    std::vector<std::size_t> heights;

    /// Most significant digit first, the orientation vertex heights are
    /// usually drawn in. Digits are joined directly when every height is
    /// below 10, otherwise separated by single spaces.
    std::string to_display() const;
};

/// Height of the deepest valley; nullopt when the expansion has no 0 digit.
using ValleyDepth = std::optional<std::size_t>;

// ============================================================================
// Measurements
// ============================================================================

/// Count of trailing 1 digits (0 only for d = 0).
std::size_t repunit_suffix_len(const DyckNumber& d);

/// Empty for d = 0.
HeightProfile height_profile(const DyckNumber& d);

/// Minimum, over every 0->1 transition read from the least significant end,
/// of the height just before the ascent.
ValleyDepth valley_depth(const DyckNumber& d);

// ============================================================================
// Successor
// ============================================================================

/// 2^k - 1.
DyckNumber mersenne(std::size_t k);

/// Successor of the k-th Mersenne number: M_k + 2^ceil(k/2), binary shape
/// 1 0^floor(k/2) 1^ceil(k/2).
DyckNumber mersenne_successor(std::size_t k);

/// The least Dyck number strictly greater than d, in O(bit-length):
///
///   d = 0                  ->  1
///   d = M_n (r = n)        ->  mersenne_successor(n)
///   r in {1, 2}            ->  d + 2
///   otherwise              ->  d + 2^(r - 1 - floor(h / 2)),  h = min(VD(d), r - 2)
///
/// where r is the repunit suffix length. Clamping the valley depth at r - 2
/// accounts for the valley created when the top bit of the repunit suffix is
/// swapped with the 0 above it; no other height changes under that swap.
DyckNumber successor(const DyckNumber& d);

// ============================================================================
// Codecs
// ============================================================================

/// Restores leading zeros up to length 2 * popcount(d), then reads digits
/// from the most significant end with 0 -> Up and 1 -> Down.
DyckWord to_dyck_word(const DyckNumber& d);

DyckNumber from_dyck_word(const DyckWord& w);

/// Value of the same path under Up -> 1, Down -> 0 (the A014486 term), which
/// is the bitwise complement of d over 2 * popcount(d) digits.
Natural to_standard_code(const DyckNumber& d);

} // namespace dyck

#endif
