#ifndef SYLOWCHAR_CHAR_EVAL_HPP
#define SYLOWCHAR_CHAR_EVAL_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "sylowchar/partition.hpp"

namespace sylowchar {

/// Memo cache for Murnaghan-Nakayama evaluations. One cache per scan
/// (or per thread); evaluations through separate caches are independent.
class MnCache {
public:
    /// chi^lambda at any permutation of cycle type c. Requires |lambda| = |c|.
    mpz_class character(const Partition& lambda, const Partition& cycle_type);

private:
    // Cycles processed largest-first; key is (shape, remaining-cycle suffix).
    std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, mpz_class> memo_;

    mpz_class eval(std::vector<unsigned> beta_shape, const std::vector<unsigned>& cycles,
                   std::size_t next);
};

/// One-shot evaluation (fresh cache).
mpz_class mn_character(const Partition& lambda, const Partition& cycle_type);

/// chi^lambda(1) by the hook-length formula, exact division.
mpz_class degree(const Partition& lambda);

mpz_class factorial(std::uint64_t n);

/// Centralizer order z_c = prod l^{m_l} m_l! of a cycle type.
mpz_class centralizer_order(const Partition& cycle_type);

/// Size of the S_n conjugacy class of cycle type c: n!/z_c.
mpz_class class_size(const Partition& cycle_type);

}  // namespace sylowchar

#endif
