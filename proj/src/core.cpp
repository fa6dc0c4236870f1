#include "dyck/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dyck {

using boost::multiprecision::bit_test;

NotDyckNumberError::NotDyckNumberError(const Natural& value, std::size_t suffix_length)
    : std::domain_error(value.str() + " is not a Dyck number: suffix " +
                        to_binary(value).substr(bit_length(value) > suffix_length
                                                    ? bit_length(value) - suffix_length
                                                    : 0) +
                        " has more 0s than 1s"),
      value_(value),
      suffix_length_(suffix_length) {}

std::string NotDyckNumberError::violating_suffix() const {
    std::string digits = to_binary(value_);
    return digits.substr(digits.size() - suffix_length_);
}

std::optional<std::size_t> find_suffix_violation(const Natural& n) {
    if (n.is_zero()) {
        return std::nullopt;
    }
    const std::size_t len = bit_length(n);
    std::ptrdiff_t balance = 0;
    for (std::size_t p = 0; p < len; ++p) {
        balance += bit_test(n, p) ? 1 : -1;
        if (balance < 0) {
            return p + 1;
        }
    }
    return std::nullopt;
}

bool is_dyck_number(const Natural& n) { return !find_suffix_violation(n).has_value(); }

DyckNumber detail::trusted(Natural value) {
    return DyckNumber(DyckNumber::TrustedTag{}, std::move(value));
}

DyckNumber::DyckNumber(Natural value) {
    if (value.sign() < 0) {
        throw std::invalid_argument("Dyck numbers are non-negative");
    }
    if (auto violation = find_suffix_violation(value)) {
        throw NotDyckNumberError(value, *violation);
    }
    value_ = std::move(value);
}

// ----------------------------------------------------------------------------
// DyckWord
// ----------------------------------------------------------------------------

DyckWord::DyckWord(std::vector<Step> steps) {
    std::ptrdiff_t level = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        level += steps[i] == Step::up ? 1 : -1;
        if (level < 0) {
            throw NotDyckWordError("not a Dyck word: prefix of length " + std::to_string(i + 1) +
                                       " has more downs than ups",
                                   i);
        }
    }
    if (level != 0) {
        throw NotDyckWordError("not a Dyck word: " + std::to_string(level) + " unmatched up step(s)",
                               steps.size());
    }
    steps_ = std::move(steps);
}

DyckWord DyckWord::parse(std::string_view text) {
    std::vector<Step> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Step step;
        if (c == 'U' || c == 'u') {
            step = Step::up;
        } else if (c == 'D' || c == 'd') {
            step = Step::down;
        } else {
            throw NotDyckWordError(std::string("not a Dyck word: unexpected character '") + c + "'",
                                   steps.size());
        }
        ++i;
        if (i < text.size() && text[i] == '^') {
            ++i;
        }
        std::size_t repeat = 1;
        const char* first = text.data() + i;
        const char* last = text.data() + text.size();
        if (first != last && std::isdigit(static_cast<unsigned char>(*first))) {
            auto [ptr, ec] = std::from_chars(first, last, repeat);
            if (ec != std::errc{}) {
                throw NotDyckWordError("not a Dyck word: bad run length", steps.size());
            }
            i += static_cast<std::size_t>(ptr - first);
        } else if (i > 0 && text[i - 1] == '^') {
            throw NotDyckWordError("not a Dyck word: '^' without exponent", steps.size());
        }
        steps.insert(steps.end(), repeat, step);
    }
    return DyckWord(std::move(steps));
}

std::string DyckWord::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) {
        out.push_back(static_cast<char>(s));
    }
    return out;
}

std::string DyckWord::to_run_length_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size();) {
        std::size_t j = i;
        while (j < steps_.size() && steps_[j] == steps_[i]) {
            ++j;
        }
        out.push_back(static_cast<char>(steps_[i]));
        if (j - i > 1) {
            out += '^' + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string HeightProfile::to_display() const {
    const bool compact = std::all_of(heights.begin(), heights.end(), [](std::size_t h) { return h < 10; });
    std::string out;
    for (auto it = heights.rbegin(); it != heights.rend(); ++it) {
        if (!compact && it != heights.rbegin()) {
            out.push_back(' ');
        }
        out += std::to_string(*it);
    }
    return out;
}

// ----------------------------------------------------------------------------
// Measurements
// ----------------------------------------------------------------------------

std::size_t repunit_suffix_len(const DyckNumber& d) {
    const Natural& n = d.value();
    const std::size_t len = d.bit_length();
    std::size_t r = 0;
    while (r < len && bit_test(n, r)) {
        ++r;
    }
    return r;
}

HeightProfile height_profile(const DyckNumber& d) {
    const Natural& n = d.value();
    const std::size_t len = d.bit_length();
    HeightProfile profile;
    profile.heights.reserve(len);
    std::size_t h = 0;
    for (std::size_t p = 0; p < len; ++p) {
        if (bit_test(n, p)) {
            ++h;
        } else {
            --h; // never wraps: d satisfies the suffix rule
        }
        profile.heights.push_back(h);
    }
    return profile;
}

ValleyDepth valley_depth(const DyckNumber& d) {
    const Natural& n = d.value();
    const std::size_t len = d.bit_length();
    ValleyDepth deepest;
    std::size_t h = 0;
    bool previous_was_zero = false;
    for (std::size_t p = 0; p < len; ++p) {
        if (bit_test(n, p)) {
            if (previous_was_zero && (!deepest || h < *deepest)) {
                deepest = h;
            }
            ++h;
            previous_was_zero = false;
        } else {
            --h;
            previous_was_zero = true;
        }
    }
    return deepest;
}

// ----------------------------------------------------------------------------
// Successor
// ----------------------------------------------------------------------------

DyckNumber mersenne(std::size_t k) { return detail::trusted(pow2(k) - 1); }

DyckNumber mersenne_successor(std::size_t k) {
    return detail::trusted(pow2(k) - 1 + pow2((k + 1) / 2));
}

DyckNumber successor(const DyckNumber& d) {
    if (d.is_zero()) {
        return detail::trusted(1);
    }
    const std::size_t len = d.bit_length();
    const std::size_t r = repunit_suffix_len(d);
    if (r == len) {
        return mersenne_successor(len);
    }
    if (r <= 2) {
        return detail::trusted(d.value() + 2);
    }
    // d is not a repunit, so it has at least one valley.
    const std::size_t h = std::min(*valley_depth(d), r - 2);
    return detail::trusted(d.value() + pow2(r - 1 - h / 2));
}

// ----------------------------------------------------------------------------
// Codecs
// ----------------------------------------------------------------------------

DyckWord to_dyck_word(const DyckNumber& d) {
    const Natural& n = d.value();
    const std::size_t length = 2 * popcount(n);
    std::vector<Step> steps;
    steps.reserve(length);
    for (std::size_t i = length; i-- > 0;) {
        steps.push_back(bit_test(n, i) ? Step::down : Step::up);
    }
    return DyckWord(std::move(steps));
}

DyckNumber from_dyck_word(const DyckWord& w) {
    Natural n = 0;
    for (Step s : w.steps()) {
        n <<= 1;
        if (s == Step::down) {
            n |= 1;
        }
    }
    return detail::trusted(std::move(n));
}

Natural to_standard_code(const DyckNumber& d) {
    const Natural& n = d.value();
    return (pow2(2 * popcount(n)) - 1) ^ n;
}

} // namespace dyck
