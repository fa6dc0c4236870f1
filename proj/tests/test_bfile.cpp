#include <doctest.h>

#include <random>
#include <sstream>

#include "dyck/bfile.hpp"
#include "dyck/enumerate.hpp"

using namespace dyck;
using namespace dyck::oeis;

TEST_CASE("parse_bfile") {
    const BFile a = parse_bfile("1 0\n2 1\n3 3\n");
    CHECK(a.offset == 1);
    CHECK(a.values == std::vector<Natural>{0, 1, 3});

    const BFile b = parse_bfile("# comment\n1 0\n");
    CHECK(b.offset == 1);
    CHECK(b.values == std::vector<Natural>{0});

    try {
        parse_bfile("1 0\n3 3\n");
        FAIL("expected throw");
    } catch (const BFileParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("gap") != std::string::npos);
    }
}

TEST_CASE("parse_bfile tolerates CRLF, tabs and blank lines") {
    const BFile f = parse_bfile("# A036991\r\n\r\n0\t0\r\n1   1  \r\n2 3\r\n");
    CHECK(f.offset == 0);
    CHECK(f.values == std::vector<Natural>{0, 1, 3});
    CHECK(parse_bfile("").empty());
    CHECK(parse_bfile("-1 5\n0 6\n").offset == -1);
    CHECK(parse_bfile("1 123456789012345678901234567890\n").values[0] ==
          Natural("123456789012345678901234567890"));
}

TEST_CASE("parse_bfile reports malformed lines") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_bfile(text);
        } catch (const BFileParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("1 0\n2 x\n") == 2);
    CHECK(line_of("1 0\nz 1\n") == 2);
    CHECK(line_of("# c\n1\n") == 2);
    CHECK(line_of("1 0 7\n") == 1);
    CHECK(line_of("1 -3\n") == 1);
    CHECK(line_of("1 0\n2 1\n2 3\n") == 3);
}

TEST_CASE("emit_bfile") {
    const std::vector<Natural> head{0, 1, 3};
    CHECK(emit_bfile(head, 1) == "1 0\n2 1\n3 3\n");
    CHECK(emit_bfile(std::vector<Natural>{}, 1).empty());

    std::vector<Natural> terms;
    for (const DyckNumber& d : iter_from(DyckNumber())) {
        terms.push_back(d.value());
        if (terms.size() == 13496) break;
    }
    const std::string text = emit_bfile(terms, 1);
    CHECK(text.substr(text.rfind('\n', text.size() - 2) + 1) == "13496 65535\n");
    CHECK(emit_bfile(terms, 1) == text);
}

TEST_CASE("emit and parse are inverse") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BFile f;
        f.offset = static_cast<std::int64_t>(rng() % 100) - 50;
        const std::size_t n = rng() % 40;
        for (std::size_t i = 0; i < n; ++i) {
            Natural v = rng();
            v <<= static_cast<unsigned>(rng() % 200);
            f.values.push_back(v);
        }
        const std::string text = emit_bfile(f.values, f.offset);
        const BFile back = parse_bfile(text);
        if (n == 0) {
            CHECK(back.empty());
        } else {
            CHECK(back == f);
        }
        CHECK(emit_bfile(back.values, back.offset) == text);
    }
}

TEST_CASE("compare") {
    const BFile ref = parse_bfile("1 0\n2 1\n3 3\n4 5\n5 7\n6 11\n");
    DiffReport same = compare(ref, ref);
    CHECK(same.verdict == Verdict::match);
    CHECK(same.compared_count == 6);
    CHECK_FALSE(same.first_mismatch);

    BFile perturbed = ref;
    perturbed.values[4] = 9;
    const DiffReport bad = compare(ref, perturbed);
    CHECK(bad.verdict == Verdict::mismatch);
    REQUIRE(bad.first_mismatch);
    CHECK(bad.first_mismatch->index == 5);
    CHECK(bad.first_mismatch->expected == 9);
    CHECK(bad.first_mismatch->actual == 7);

    BFile shorter = ref;
    shorter.values.pop_back();
    const DiffReport len = compare(shorter, ref);
    CHECK(len.verdict == Verdict::length_differs);
    CHECK(len.compared_count == 5);

    BFile shifted = ref;
    shifted.offset = 0;
    const DiffReport off = compare(shifted, ref);
    CHECK(off.offsets_differ);
    CHECK(off.verdict == Verdict::mismatch);

    const BFile far = parse_bfile("100 1\n");
    const DiffReport disjoint = compare(far, ref);
    CHECK(disjoint.compared_count == 0);
    CHECK(disjoint.verdict == Verdict::mismatch);

    CHECK(std::string(to_string(Verdict::length_differs)) == "length-differs");
}
