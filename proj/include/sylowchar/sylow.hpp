#ifndef SYLOWCHAR_SYLOW_HPP
#define SYLOWCHAR_SYLOW_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>

#include "sylowchar/partition.hpp"

namespace sylowchar {

/// Exact element counts per S_n cycle type for a Sylow p-subgroup P_n.
/// Every key is a partition of n whose parts are powers of p (1 included);
/// counts sum to |P_n|.
struct ClassDistribution {
    unsigned prime = 0;
    std::uint64_t degree = 0;
    std::map<Partition, mpz_class> counts;

    mpz_class total() const;
};

/// |P_n| = p^(sum of floor(n/p^i)).
mpz_class sylow_order(unsigned p, std::uint64_t n);

/// Distribution for P_{p^k} via the wreath-product recursion.
/// Bound: p^k <= 243 by default.
ClassDistribution prime_power_distribution(unsigned p, unsigned k);

/// Distribution for P_n: convolution of the prime-power distributions
/// given by the p-adic digits of n. Bound: n <= max_degree_bound().
ClassDistribution distribution(unsigned p, std::uint64_t n);

/// Independent cross-check: builds explicit generators of P_n inside
/// S_n, closes them to the full group, and tallies cycle types.
/// Requires |P_n| <= 10^6.
ClassDistribution enumeration_oracle(unsigned p, std::uint64_t n);

}  // namespace sylowchar

#endif
