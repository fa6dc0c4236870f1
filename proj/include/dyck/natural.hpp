#ifndef DYCK_NATURAL_HPP
#define DYCK_NATURAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

// Arbitrary-precision natural number. Values handed out by this library are
// never negative; the signed backend is only an implementation detail.
using Natural = boost::multiprecision::cpp_int;

class NumberFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of binary digits without leading zeros; 0 for zero.
std::size_t bit_length(const Natural& n);

std::size_t popcount(const Natural& n);

/// 2^k as a Natural.
Natural pow2(std::size_t k);

/// Parses a non-negative integer. Accepts plain decimal, `0b`/`0B` binary and
/// `0x`/`0X` hexadecimal. Digit separators and signs are rejected.
Natural parse_natural(std::string_view text);

/// Binary expansion, most significant digit first, no leading zeros ("0" for 0).
std::string to_binary(const Natural& n);

std::string to_decimal(const Natural& n);

} // namespace dyck

#endif
