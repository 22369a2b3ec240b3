#ifndef SYLOWCHAR_LR_HPP
#define SYLOWCHAR_LR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "sylowchar/partition.hpp"

namespace sylowchar {

/// One Littlewood-Richardson filling: entries of the skew cells in
/// reading order (right to left within each row, rows top to bottom).
struct LRFilling {
    std::vector<unsigned> word;
};

/// True iff every prefix of seq contains strictly more (v-1)'s than v's
/// before each occurrence of v > 1 (lattice-word condition).
bool is_good_sequence(const std::vector<unsigned>& seq);

/// c^lambda_{mu nu}. Requires |lambda| = |mu| + |nu|; returns 0 when
/// mu does not fit inside lambda.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Positivity only; short-circuits on the first filling found.
bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Set of all filling types of a skew shape, deduplicated, in canonical
/// order. Guarded by a cell-count bound (default 30).
std::vector<Partition> lr_types(const SkewShape& gamma);
std::vector<Partition> lr_types(const SkewShape& gamma, std::uint64_t bound);

/// Enumerates every LR filling of gamma (any type), invoking the visitor
/// with the reading word and its type. Used by type collection and by
/// the property tests that inspect individual fillings.
void for_each_lr_filling(const SkewShape& gamma,
                         const std::function<void(const LRFilling&, const Partition&)>& visit);

enum class ShapeClass { straight, rotated_straight, multiple };

/// straight if gamma is a translated Young diagram, rotated_straight if
/// its 180-degree rotation is, multiple otherwise.
ShapeClass unique_filling_classification(const SkewShape& gamma);

/// Multiplicity of chi^{mu_1} x ... x chi^{mu_q} in the restriction of
/// chi^lambda to the Young subgroup S_{|mu_1|} x ... x S_{|mu_q|}.
std::uint64_t iterated_lr_multiplicity(const Partition& lambda,
                                       const std::vector<Partition>& factors);

/// Positivity-only variant with early exit.
bool iterated_lr_positive(const Partition& lambda, const std::vector<Partition>& factors);

/// Independent cross-check: <chi^lambda restricted to S_m x S_{n-m},
/// chi^mu x chi^nu> by character inner product over pairs of cycle
/// types. Bounded at n <= 12.
std::uint64_t restriction_oracle(const Partition& lambda, const Partition& mu,
                                 const Partition& nu);

}  // namespace sylowchar

#endif
