#include <doctest.h>

#include <algorithm>
#include <ranges>
#include <vector>

#include "dyck/enumerate.hpp"
#include "dyck/oracle.hpp"

using namespace dyck;

namespace {

std::vector<Natural> values(const std::vector<DyckNumber>& ds) {
    std::vector<Natural> out;
    for (const auto& d : ds) out.push_back(d.value());
    return out;
}

std::vector<Natural> nats(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Natural> take(SuccessorStream stream, std::size_t n) {
    std::vector<Natural> out;
    for (const DyckNumber& d : stream | std::views::take(n)) out.push_back(d.value());
    return out;
}

} // namespace

TEST_CASE("iter_from") {
    CHECK(take(iter_from(DyckNumber()), 10) == nats({0, 1, 3, 5, 7, 11, 13, 15, 19, 21}));
    CHECK(take(iter_from(DyckNumber(31)), 2) == nats({31, 39}));
    CHECK(take(iter_from(DyckNumber(1)), 1) == nats({1}));
    CHECK_THROWS_AS(iter_from(DyckNumber(9)), NotDyckNumberError);
    static_assert(std::ranges::input_range<SuccessorStream>);
}

TEST_CASE("SequenceCursor") {
    SequenceCursor c;
    CHECK(c.current().value() == 0);
    CHECK(c.ordinal() == 1);
    c.advance();
    c.advance();
    CHECK(c.current().value() == 3);
    CHECK(c.ordinal() == 3);

    const SequenceCursor at15 = SequenceCursor::at(15);
    CHECK(at15.current().value() == 39);
    CHECK_THROWS_AS(SequenceCursor(DyckNumber(), 0), std::out_of_range);
}

TEST_CASE("range_terms") {
    CHECK(values(range_terms(5)) == nats({19, 21, 23, 27, 29, 31}));
    CHECK(values(range_terms(4)) == nats({11, 13, 15}));
    CHECK(values(range_terms(1)) == nats({1}));

    const auto r16 = range_terms(16);
    REQUIRE(r16.size() == 6435);
    CHECK(r16[0].value() == 33023);
    CHECK(r16[1].value() == 33151);
    CHECK(r16.back().value() == 65535);

    CHECK_THROWS_AS(range_terms(0), std::invalid_argument);
    CHECK(values(range_terms(0, true)) == nats({0}));
}

TEST_CASE("range partition matches the brute-force scan") {
    DyckNumber previous_last;
    for (std::size_t k = 1; k <= 14; ++k) {
        const auto terms = range_terms(k);
        CHECK(terms == oracle::brute_range(k));
        CHECK(terms.front() == mersenne_successor(k - 1));
        CHECK(terms.back() == mersenne(k));
        CHECK(successor(previous_last) == terms.front());
        previous_last = terms.back();
    }
}

TEST_CASE("central_binomial") {
    CHECK(central_binomial(4) == 6);
    CHECK(central_binomial(15) == 6435);
    CHECK(central_binomial(0) == 1);
    const std::vector<int> a001405{1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435, 12870};
    for (std::size_t m = 0; m < a001405.size(); ++m) CHECK(central_binomial(m) == a001405[m]);
    // C(100, 50)
    CHECK(central_binomial(100) == Natural("100891344545564193334812497256"));
    // Pascal: C(m, floor(m/2)) relations through C(m-1, .)
    for (std::size_t m = 2; m < 200; ++m) {
        if (m % 2 == 1) {
            CHECK(central_binomial(m) == central_binomial(m - 1) * m / ((m + 1) / 2));
        } else {
            CHECK(central_binomial(m) == central_binomial(m - 1) * 2);
        }
    }
}

TEST_CASE("range_stats") {
    const RangeStats s5 = range_stats(5);
    CHECK(s5.first.value() == 19);
    CHECK(s5.last.value() == 31);
    CHECK(s5.size == 6);
    CHECK(s5.expected == 6);
    CHECK(s5.matches);

    const RangeStats s1 = range_stats(1);
    CHECK(s1.first.value() == 1);
    CHECK(s1.last.value() == 1);
    CHECK(s1.size == 1);

    const RangeStats s16 = range_stats(16);
    CHECK(s16.size == 6435);
    CHECK(s16.expected == 6435);
    CHECK(s16.matches);

    CHECK_THROWS(range_stats(0));
}

TEST_CASE("verify_conjecture") {
    const ConjectureReport r5 = verify_conjecture(5);
    CHECK(r5.all_match());
    std::vector<Natural> sizes;
    for (const auto& s : r5.ranges) sizes.push_back(s.size);
    CHECK(sizes == nats({1, 1, 2, 3, 6}));

    const ConjectureReport r20 = verify_conjecture(20);
    CHECK(r20.all_match());
    // Sizes counted by scanning every odd number of each bit-length.
    const auto brute = nats({1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435, 12870, 24310,
                             48620, 92378});
    for (std::size_t k = 1; k <= 20; ++k) CHECK(r20.ranges[k - 1].size == brute[k - 1]);

    CHECK_THROWS(verify_conjecture(0));
}

TEST_CASE("range first terms reproduce sequence (3) and its alternating recurrence") {
    const auto expected = nats({1, 3, 5, 11, 19, 39, 71, 143, 271, 543, 1055, 2111, 4159, 8319, 16511});
    for (std::size_t k = 1; k <= 15; ++k) {
        CHECK(range_terms(k).front().value() == expected[k - 1]);
    }
    for (std::size_t k = 1; k <= 14; ++k) {
        const Natural& f = expected[k - 1];
        const Natural& next = expected[k];
        if (k % 2 == 1) {
            CHECK(next == 2 * f + 1);
        } else {
            CHECK(next == f + pow2(k - 1));
        }
    }
}

TEST_CASE("term_at / index_of") {
    CHECK(term_at(1).value() == 0);
    CHECK(term_at(4).value() == 5);
    CHECK(term_at(13496).value() == 65535);
    CHECK(index_of(DyckNumber()) == 1);
    CHECK(index_of(DyckNumber(65535)) == 13496);
    CHECK(index_of(DyckNumber(39)) == 15);
    CHECK_THROWS_AS(term_at(0), std::out_of_range);
    CHECK_THROWS_AS(index_of(DyckNumber(9)), NotDyckNumberError);

    CHECK(term_at(13496, IndexStrategy::iterate).value() == 65535);
    CHECK(index_of(DyckNumber(65535), IndexStrategy::iterate) == 13496);
}

TEST_CASE("term_at and index_of are inverse below 2^16") {
    std::uint64_t i = 1;
    for (const DyckNumber& d : iter_from(DyckNumber())) {
        if (d.bit_length() > 16) break;
        REQUIRE(index_of(d) == i);
        REQUIRE(term_at(i) == d);
        ++i;
    }
    CHECK(i - 1 == 13496);
}

TEST_CASE("cumulative counts at Mersenne numbers") {
    Natural total = 1;
    for (std::size_t k = 1; k <= 16; ++k) {
        total += central_binomial(k - 1);
        CHECK(index_of(mersenne(k)) == total);
    }
    CHECK(total == 13496);
}
