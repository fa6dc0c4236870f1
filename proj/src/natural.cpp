#include "dyck/natural.hpp"

#include <algorithm>

namespace dyck {

std::size_t bit_length(const Natural& n) {
    if (n.is_zero()) {
        return 0;
    }
    return boost::multiprecision::msb(n) + 1;
}

std::size_t popcount(const Natural& n) {
    std::size_t count = 0;
    const std::size_t len = bit_length(n);
    for (std::size_t i = 0; i < len; ++i) {
        count += boost::multiprecision::bit_test(n, i) ? 1 : 0;
    }
    return count;
}

Natural pow2(std::size_t k) {
    Natural p = 0;
    boost::multiprecision::bit_set(p, k);
    return p;
}

namespace {

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

Natural parse_natural(std::string_view text) {
    const std::string_view original = text;
    unsigned radix = 10;
    if (text.size() > 2 && text[0] == '0') {
        if (text[1] == 'b' || text[1] == 'B') {
            radix = 2;
            text.remove_prefix(2);
        } else if (text[1] == 'x' || text[1] == 'X') {
            radix = 16;
            text.remove_prefix(2);
        }
    }
    if (text.empty()) {
        throw NumberFormatError("empty number");
    }
    Natural value = 0;
    for (char c : text) {
        const int d = digit_value(c);
        if (d < 0 || static_cast<unsigned>(d) >= radix) {
            throw NumberFormatError("malformed number '" + std::string(original) + "'");
        }
        value *= radix;
        value += d;
    }
    return value;
}

std::string to_binary(const Natural& n) {
    if (n.is_zero()) {
        return "0";
    }
    const std::size_t len = bit_length(n);
    std::string out(len, '0');
    for (std::size_t i = 0; i < len; ++i) {
        if (boost::multiprecision::bit_test(n, i)) {
            out[len - 1 - i] = '1';
        }
    }
    return out;
}

std::string to_decimal(const Natural& n) { return n.str(); }

} // namespace dyck
