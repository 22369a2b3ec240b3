#include <algorithm>

#include "doctest.h"
#include "sylowchar/char_eval.hpp"

using namespace sylowchar;

namespace {

// Brute-force character of the natural permutation module minus the
// trivial one: chi^{(n-1,1)}(g) = fix(g) - 1.
long fixed_points(const Partition& cycle_type) {
    return static_cast<long>(
        std::count(cycle_type.parts().begin(), cycle_type.parts().end(), 1u));
}

Partition ones(unsigned n) { return Partition(std::vector<unsigned>(n, 1u)); }

}  // namespace

TEST_CASE("murnaghan-nakayama examples") {
    CHECK(mn_character(parse_partition("4,1"), parse_partition("5")) == -1);
    CHECK(mn_character(parse_partition("2,2"), parse_partition("3,1")) == -1);
    CHECK(mn_character(parse_partition("8,1"), parse_partition("3,1^6")) == 5);
    for (const Partition& c : enumerate_partitions(9))
        CHECK(mn_character(parse_partition("9"), c) == 1);
    CHECK_THROWS_AS(mn_character(parse_partition("2,1"), parse_partition("4")),
                    std::invalid_argument);
}

TEST_CASE("degree examples and hook-length consistency") {
    CHECK(degree(parse_partition("2,2")) == 2);
    CHECK(degree(parse_partition("4,1")) == 4);
    CHECK(degree(parse_partition("9")) == 1);
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(degree(lambda) == mn_character(lambda, ones(static_cast<unsigned>(n))));
}

TEST_CASE("orthogonality over classes, n <= 8") {
    MnCache cache;
    for (std::uint64_t n = 1; n <= 8; ++n) {
        auto lambdas = enumerate_partitions(n);
        auto classes = enumerate_partitions(n);
        mpz_class nfact = factorial(n);
        for (const Partition& lambda : lambdas) {
            for (const Partition& mu : lambdas) {
                mpz_class sum = 0;
                for (const Partition& c : classes)
                    sum += class_size(c) * cache.character(lambda, c) * cache.character(mu, c);
                CHECK(sum == (lambda == mu ? nfact : mpz_class(0)));
            }
        }
    }
}

TEST_CASE("conjugation twist by the sign character, n <= 10") {
    MnCache cache;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            Partition conj = conjugate(lambda);
            for (const Partition& c : enumerate_partitions(n)) {
                int sign = ((n - c.rows()) % 2 == 0) ? 1 : -1;
                CHECK(cache.character(conj, c) == sign * cache.character(lambda, c));
            }
        }
    }
}

TEST_CASE("standard character: chi^{(n-1,1)} counts fixed points minus one") {
    MnCache cache;
    for (unsigned n = 2; n <= 12; ++n) {
        std::vector<unsigned> parts{n - 1, 1};
        if (n == 2) parts = {1, 1};
        Partition lambda(parts);
        for (const Partition& c : enumerate_partitions(n))
            CHECK(cache.character(lambda, c) == fixed_points(c) - 1);
    }
}

TEST_CASE("class sizes sum to n!") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        mpz_class sum = 0;
        for (const Partition& c : enumerate_partitions(n)) sum += class_size(c);
        CHECK(sum == factorial(n));
    }
}
