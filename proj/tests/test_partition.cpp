#include "doctest.h"
#include "oracles.hpp"
#include "sylowchar/partition.hpp"

using namespace sylowchar;

TEST_CASE("conjugate examples") {
    CHECK(conjugate(parse_partition("5,4")) == parse_partition("2,2,2,2,1"));
    CHECK(conjugate(parse_partition("3,2,1")) == parse_partition("3,2,1"));
    CHECK(conjugate(parse_partition("9")) == parse_partition("1^9"));
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is an involution") {
    for (std::uint64_t n = 0; n <= 20; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("containment") {
    CHECK(contains(parse_partition("5,4"), parse_partition("2,2")));
    CHECK_FALSE(contains(parse_partition("2,2"), parse_partition("3")));
    CHECK(contains(parse_partition("3,1"), Partition()));
    SUBCASE("mutual containment forces equality") {
        for (const Partition& a : enumerate_partitions(6))
            for (const Partition& b : enumerate_partitions(6))
                if (contains(a, b) && contains(b, a)) CHECK(a == b);
    }
}

TEST_CASE("enumeration order and counts") {
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == parse_partition("4"));
    CHECK(p4[1] == parse_partition("3,1"));
    CHECK(p4[2] == parse_partition("2,2"));
    CHECK(p4[3] == parse_partition("2,1,1"));
    CHECK(p4[4] == parse_partition("1,1,1,1"));

    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    CHECK(enumerate_partitions(9).size() == 30);

    SUBCASE("counts match the pentagonal recurrence up to 40") {
        auto counts = oracles::partition_counts(40);
        for (std::uint64_t n = 0; n <= 40; ++n)
            CHECK(mpz_class(static_cast<unsigned long>(enumerate_partitions(n, 40).size())) ==
                  counts[n]);
    }

    SUBCASE("enumeration output is sorted in canonical order") {
        auto all = enumerate_partitions(10);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    }

    CHECK_THROWS_AS(enumerate_partitions(61), std::invalid_argument);
}

TEST_CASE("subpartition enumeration") {
    // mu |- 3 inside (3,2,1): (3), (2,1) -- (1,1,1) needs 3 rows with
    // third row length 1 <= 1, allowed.
    auto subs = enumerate_subpartitions(parse_partition("3,2,1"), 3);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == parse_partition("3"));
    CHECK(subs[1] == parse_partition("2,1"));
    CHECK(subs[2] == parse_partition("1,1,1"));
    CHECK(enumerate_subpartitions(parse_partition("2,2"), 5).empty());
}

TEST_CASE("p-adic expansion") {
    auto e = p_adic(10, 3);
    CHECK(e.digits == std::vector<unsigned>{1, 0, 1});
    CHECK(e.digit_sum() == 2);

    e = p_adic(48, 3);
    CHECK(e.digits == std::vector<unsigned>{0, 1, 2, 1});
    CHECK(e.digit_sum() == 4);

    e = p_adic(25, 5);
    CHECK(e.digits == std::vector<unsigned>{0, 0, 1});
    CHECK(e.digit_sum() == 1);

    CHECK_THROWS_AS(p_adic(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(p_adic(10, 9), std::invalid_argument);

    SUBCASE("reconstruction for n up to 10^6") {
        for (unsigned p : {3u, 5u, 7u}) {
            for (std::uint64_t n = 1; n <= 1000000; ++n) {
                auto d = p_adic(n, p);
                if (d.reconstruct() != n) {
                    REQUIRE(d.reconstruct() == n);  // report only on failure
                }
            }
        }
    }
}

TEST_CASE("parse and format") {
    CHECK(parse_partition("2^4,1") == Partition({2, 2, 2, 2, 1}));
    CHECK(parse_partition("5,4") == Partition({5, 4}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK(format_partition(parse_partition("2^4,1")) == "2,2,2,2,1");
    CHECK(format_partition(Partition()) == "0");
    for (const Partition& lambda : enumerate_partitions(12))
        CHECK(parse_partition(format_partition(lambda)) == lambda);
}
