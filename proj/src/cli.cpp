#include "dyck/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "dyck/bfile.hpp"
#include "dyck/core.hpp"
#include "dyck/enumerate.hpp"
#include "dyck/oracle.hpp"
#include "dyck/parallel.hpp"

namespace dyck::cli {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool binary = false;

    std::string show(const Natural& n) const { return binary ? to_binary(n) : to_decimal(n); }
    std::string show(const DyckNumber& d) const { return show(d.value()); }
};

DyckNumber parse_dyck(const std::string& text) { return DyckNumber(parse_natural(text)); }

std::size_t parse_small(const std::string& text, const char* what) {
    const Natural n = parse_natural(text);
    if (n > 1'000'000) {
        throw NumberFormatError(std::string(what) + " out of range: " + text);
    }
    return static_cast<std::size_t>(n);
}

int cmd_check(const Context& ctx, const std::string& number) {
    const Natural n = parse_natural(number);
    if (auto violation = find_suffix_violation(n)) {
        const std::string bits = to_binary(n);
        ctx.out << "no (violating suffix " << bits.substr(bits.size() - *violation) << ")\n";
        return kNegative;
    }
    ctx.out << "yes\n";
    return kOk;
}

int cmd_succ(const Context& ctx, const std::string& number, std::uint64_t count) {
    DyckNumber d = parse_dyck(number);
    for (std::uint64_t i = 0; i < count; ++i) {
        d = successor(d);
        ctx.out << ctx.show(d) << '\n';
    }
    return kOk;
}

int cmd_range(const Context& ctx, const std::string& k_text, bool list, bool include_zero) {
    const std::size_t k = parse_small(k_text, "range index");
    if (list) {
        bool first = true;
        for_each_in_range(
            k,
            [&](const DyckNumber& d) {
                ctx.out << (first ? "" : " ") << ctx.show(d);
                first = false;
            },
            include_zero);
        ctx.out << '\n';
        return kOk;
    }
    if (k == 0) {
        if (!include_zero) {
            throw std::invalid_argument("range 0 requires --include-zero");
        }
        ctx.out << "k=0 first=0 last=0 size=1\n";
        return kOk;
    }
    const RangeStats s = range_stats(k);
    ctx.out << "k=" << s.k << " first=" << ctx.show(s.first) << " last=" << ctx.show(s.last)
            << " size=" << s.size << " expected=" << s.expected << " match=" << (s.matches ? "yes" : "no")
            << '\n';
    return kOk;
}

int cmd_enumerate(const Context& ctx, const std::string& start, std::uint64_t count, bool skip_zero) {
    DyckNumber d = parse_dyck(start);
    if (skip_zero && d.is_zero()) {
        d = successor(d);
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i > 0) {
            d = successor(d);
        }
        ctx.out << ctx.show(d) << '\n';
    }
    return kOk;
}

int cmd_convert(const Context& ctx, const std::string& number, const std::string& to) {
    const DyckNumber d = parse_dyck(number);
    if (to == "word") {
        ctx.out << to_dyck_word(d).to_string() << '\n';
    } else if (to == "standard") {
        ctx.out << ctx.show(to_standard_code(d)) << '\n';
    } else if (to == "heights") {
        ctx.out << height_profile(d).to_display() << '\n';
    } else {
        throw std::invalid_argument("unknown conversion '" + to + "'");
    }
    return kOk;
}

int cmd_verify(const Context& ctx, std::size_t max_k, bool serial) {
    const ConjectureReport report =
        serial ? verify_conjecture(max_k) : parallel::verify_conjecture_parallel(max_k);
    for (const RangeStats& s : report.ranges) {
        ctx.out << "k=" << s.k << " first=" << ctx.show(s.first) << " last=" << ctx.show(s.last)
                << " size=" << s.size << " expected=" << s.expected << " match=" << (s.matches ? "yes" : "no")
                << '\n';
    }
    if (report.all_match()) {
        ctx.out << "all ranges k=1.." << max_k << " match the central binomial sizes\n";
        return kOk;
    }
    ctx.out << "MISMATCH: at least one range size differs from its central binomial\n";
    return kNegative;
}

int cmd_bfile_emit(const Context& ctx, std::int64_t offset, std::uint64_t count) {
    if (offset < 1) {
        throw std::invalid_argument("b-file offset must be at least 1 (a(1) = 0)");
    }
    if (count == 0) {
        return kOk;
    }
    SequenceCursor cursor = SequenceCursor::at(static_cast<std::uint64_t>(offset));
    oeis::BFileWriter writer(ctx.out, offset);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i > 0) {
            cursor.advance();
        }
        writer.write(cursor.current().value());
    }
    return kOk;
}

int cmd_bfile_check(const Context& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    const oeis::BFile reference = oeis::parse_bfile(in);

    oeis::BFile generated;
    generated.offset = std::max<std::int64_t>(reference.offset, 1);
    if (reference.last_index() >= generated.offset) {
        SequenceCursor cursor = SequenceCursor::at(static_cast<std::uint64_t>(generated.offset));
        for (std::int64_t i = generated.offset; i <= reference.last_index(); ++i) {
            if (i > generated.offset) {
                cursor.advance();
            }
            generated.values.push_back(cursor.current().value());
        }
    }

    const oeis::DiffReport diff = oeis::compare(generated, reference);
    ctx.out << "compared " << diff.compared_count << " terms: " << oeis::to_string(diff.verdict) << '\n';
    if (diff.offsets_differ) {
        ctx.out << "offset differs: reference starts at " << reference.offset << ", sequence starts at 1\n";
    }
    if (diff.first_mismatch) {
        ctx.out << "first mismatch at index " << diff.first_mismatch->index << ": reference "
                << diff.first_mismatch->expected << ", generated " << diff.first_mismatch->actual << '\n';
    }
    return diff.verdict == oeis::Verdict::match ? kOk : kNegative;
}

int cmd_oracle_succ(const Context& ctx, const std::string& number) {
    ctx.out << ctx.show(oracle::brute_successor(parse_dyck(number))) << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dyck numbers (OEIS A036991): membership, successor, ranges, b-files", "dyck"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{out, err};
    app.add_flag("--binary", ctx.binary, "Print numbers as binary expansions");

    std::function<int()> action;
    std::string number;
    std::uint64_t count = 1;

    auto* check = app.add_subcommand("check", "Test the suffix-balance rule");
    check->add_option("n", number, "Natural number")->required();
    check->callback([&] { action = [&] { return cmd_check(ctx, number); }; });

    auto* succ = app.add_subcommand("succ", "Print the next N Dyck numbers after D");
    succ->add_option("d", number, "Dyck number")->required();
    succ->add_option("--count", count, "How many successors")->check(CLI::PositiveNumber);
    succ->callback([&] { action = [&] { return cmd_succ(ctx, number, count); }; });

    bool list = false;
    bool stats = false;
    bool include_zero = false;
    auto* range = app.add_subcommand("range", "Members or statistics of the range of bit-length K");
    range->add_option("k", number, "Range index")->required();
    auto* list_flag = range->add_flag("--list", list, "List members in ascending order");
    range->add_flag("--stats", stats, "Print first/last/size/expected (default)")->excludes(list_flag);
    range->add_flag("--include-zero", include_zero, "Allow k = 0 (the range {0})");
    range->callback([&] { action = [&] { return cmd_range(ctx, number, list, include_zero); }; });

    std::string start = "0";
    std::uint64_t enum_count = 20;
    bool skip_zero = false;
    auto* enumerate = app.add_subcommand("enumerate", "Stream consecutive Dyck numbers");
    enumerate->add_option("--start", start, "First Dyck number (default 0)");
    enumerate->add_option("--count", enum_count, "How many terms (default 20)");
    enumerate->add_flag("--skip-zero", skip_zero, "Start at 1 when the start is the empty path");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(ctx, start, enum_count, skip_zero); }; });

    std::string to;
    auto* convert = app.add_subcommand("convert", "Encode a Dyck number as a word, standard code or heights");
    convert->add_option("d", number, "Dyck number")->required();
    convert->add_option("--to", to, "Target representation")
        ->required()
        ->check(CLI::IsMember({"word", "standard", "heights"}));
    convert->callback([&] { action = [&] { return cmd_convert(ctx, number, to); }; });

    std::string max_range;
    bool serial = false;
    auto* verify = app.add_subcommand("verify-conjecture", "Compare range sizes with central binomials");
    verify->add_option("--max-range", max_range, "Largest range index")->required();
    verify->add_flag("--serial", serial, "Count ranges on one thread");
    verify->callback([&] {
        action = [&] { return cmd_verify(ctx, std::max<std::size_t>(parse_small(max_range, "--max-range"), 1), serial); };
    });

    std::int64_t offset = 1;
    std::uint64_t bfile_count = 1000;
    std::string check_path;
    auto* bfile = app.add_subcommand("bfile", "Write or check an OEIS b-file");
    auto* count_opt = bfile->add_option("--count", bfile_count, "Number of entries (default 1000)");
    auto* offset_opt = bfile->add_option("--offset", offset, "Index of the first entry (default 1)");
    bfile->add_option("--check", check_path, "Reference b-file to compare against")
        ->excludes(count_opt)
        ->excludes(offset_opt);
    bfile->callback([&] {
        action = [&] {
            return check_path.empty() ? cmd_bfile_emit(ctx, offset, bfile_count) : cmd_bfile_check(ctx, check_path);
        };
    });

    auto* oracle_succ = app.add_subcommand("oracle-succ", "Successor by brute-force scan");
    oracle_succ->add_option("d", number, "Dyck number")->required();
    oracle_succ->callback([&] { action = [&] { return cmd_oracle_succ(ctx, number); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const NumberFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotDyckNumberError& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    }
}

} // namespace dyck::cli
