#ifndef DYCK_BFILE_HPP
#define DYCK_BFILE_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyck/natural.hpp"

// OEIS b-file format: one "index value" pair per line, consecutive indices,
// '#' comment lines and blank lines ignored.

namespace dyck::oeis {

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& message);

    /// 1-based line number in the input.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct BFile {
    std::int64_t offset = 0;
    std::vector<Natural> values;

    bool empty() const noexcept { return values.empty(); }
    std::size_t size() const noexcept { return values.size(); }
    /// Index of the last entry; offset - 1 when empty.
    std::int64_t last_index() const noexcept { return offset + static_cast<std::int64_t>(values.size()) - 1; }

    friend bool operator==(const BFile&, const BFile&) = default;
};

/// Accepts "\n" and "\r\n" line endings, any run of spaces or tabs as the
/// column separator, and trailing whitespace.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

/// Writes "index value\n" lines incrementally, for outputs too large to hold.
class BFileWriter {
public:
    BFileWriter(std::ostream& out, std::int64_t offset) : out_(out), next_index_(offset) {}

    void write(const Natural& value);
    std::int64_t next_index() const noexcept { return next_index_; }

private:
    std::ostream& out_;
    std::int64_t next_index_;
};

void emit_bfile(std::ostream& out, std::span<const Natural> terms, std::int64_t offset);
std::string emit_bfile(std::span<const Natural> terms, std::int64_t offset);

enum class Verdict { match, mismatch, length_differs };

struct Mismatch {
    std::int64_t index = 0;
    Natural expected; // reference value
    Natural actual;   // generated value
};

struct DiffReport {
    std::size_t compared_count = 0;
    std::optional<Mismatch> first_mismatch;
    bool offsets_differ = false;
    Verdict verdict = Verdict::match;
};

/// Compares values at the indices both files cover. Differing offsets make the
/// verdict `mismatch`; equal offsets with agreeing overlap but different
/// lengths give `length_differs`.
DiffReport compare(const BFile& generated, const BFile& reference);

const char* to_string(Verdict v);

} // namespace dyck::oeis

#endif
