#ifndef SYLOWCHAR_OMEGA_HPP
#define SYLOWCHAR_OMEGA_HPP

#include <cstdint>
#include <vector>

#include "sylowchar/partition.hpp"

namespace sylowchar {

/// Split of a partition of qn into parts not divisible by q (mu, stored
/// as quotient/residue pairs) and parts divisible by q (nu, stored as
/// quotients). zeta = (sum of residues)/q.
struct ResidueDecomposition {
    unsigned q = 0;
    std::vector<std::pair<unsigned, unsigned>> mu_parts;  // (k_i, x_i), part = k_i*q + x_i
    std::vector<unsigned> nu_quotients;                   // r_j, part = r_j*q
    unsigned zeta = 0;

    /// Indices into mu_parts listed in the succession order: residues
    /// descending, ties broken by larger index first.
    std::vector<std::size_t> succ_order() const;

    Partition reassemble() const;
};

/// Requires q >= 2 and q | |lambda|.
ResidueDecomposition residue_decompose(const Partition& lambda, unsigned q);

/// The part-shrinking operator P(qn) -> P((q-1)n): the first zeta
/// entries in succession order lose k_i + 1 cells, the rest lose k_i;
/// parts divisible by q are scaled by (q-1)/q; zeros are dropped.
Partition omega(const Partition& lambda, unsigned q);

}  // namespace sylowchar

#endif
