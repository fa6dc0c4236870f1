#include "dyck/bfile.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

namespace dyck::oeis {

BFileParseError::BFileParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (is_blank(s.front()) || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (is_blank(s.back()) || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

BFile parse_bfile(std::istream& in) {
    BFile file;
    std::string raw;
    std::size_t line_no = 0;
    bool have_entries = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw BFileParseError(line_no, "expected 'index value'");
        }
        const std::string_view index_text = line.substr(0, sep);
        const std::string_view value_text = trim(line.substr(sep));
        if (value_text.find_first_of(" \t") != std::string_view::npos) {
            throw BFileParseError(line_no, "too many columns");
        }

        std::int64_t index = 0;
        auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
            throw BFileParseError(line_no, "non-numeric index '" + std::string(index_text) + "'");
        }
        if (!all_digits(value_text)) {
            throw BFileParseError(line_no, "non-numeric value '" + std::string(value_text) + "'");
        }

        if (!have_entries) {
            file.offset = index;
            have_entries = true;
        } else if (index != file.last_index() + 1) {
            throw BFileParseError(line_no, "index gap: expected " + std::to_string(file.last_index() + 1) +
                                               ", found " + std::to_string(index));
        }
        file.values.emplace_back(std::string(value_text));
    }
    return file;
}

BFile parse_bfile(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

void BFileWriter::write(const Natural& value) {
    out_ << next_index_ << ' ' << value << '\n';
    ++next_index_;
}

void emit_bfile(std::ostream& out, std::span<const Natural> terms, std::int64_t offset) {
    BFileWriter writer(out, offset);
    for (const auto& t : terms) {
        writer.write(t);
    }
}

std::string emit_bfile(std::span<const Natural> terms, std::int64_t offset) {
    std::ostringstream out;
    emit_bfile(out, terms, offset);
    return out.str();
}

DiffReport compare(const BFile& generated, const BFile& reference) {
    DiffReport report;
    report.offsets_differ = generated.offset != reference.offset;

    const std::int64_t lo = std::max(generated.offset, reference.offset);
    const std::int64_t hi = std::min(generated.last_index(), reference.last_index());
    for (std::int64_t i = lo; i <= hi; ++i) {
        const Natural& actual = generated.values[static_cast<std::size_t>(i - generated.offset)];
        const Natural& expected = reference.values[static_cast<std::size_t>(i - reference.offset)];
        ++report.compared_count;
        if (actual != expected) {
            report.first_mismatch = Mismatch{i, expected, actual};
            break;
        }
    }

    if (report.first_mismatch || report.offsets_differ) {
        report.verdict = Verdict::mismatch;
    } else if (generated.size() != reference.size()) {
        report.verdict = Verdict::length_differs;
    } else {
        report.verdict = Verdict::match;
    }
    return report;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::match:
        return "match";
    case Verdict::mismatch:
        return "mismatch";
    case Verdict::length_differs:
        return "length-differs";
    }
    return "unknown";
}

} // namespace dyck::oeis
