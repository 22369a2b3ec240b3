#ifndef SYLOWCHAR_MULTIPLICITY_HPP
#define SYLOWCHAR_MULTIPLICITY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "sylowchar/char_eval.hpp"
#include "sylowchar/partition.hpp"
#include "sylowchar/sylow.hpp"

namespace sylowchar {

/// f(lambda) = <chi^lambda restricted to P_n, trivial>, computed as the
/// class-distribution-weighted character sum divided by |P_n|. The sum
/// is asserted to divide exactly; a failure would indicate a bug in one
/// of the three modules feeding it.
mpz_class trivial_multiplicity(unsigned p, const Partition& lambda);

/// Variant reusing a precomputed distribution and character cache
/// across a scan.
mpz_class trivial_multiplicity(const ClassDistribution& dist, const Partition& lambda,
                               MnCache& cache);

/// f over all partitions of n, in canonical enumeration order.
struct MultiplicityReport {
    unsigned prime = 0;
    std::uint64_t degree = 0;
    std::vector<std::pair<Partition, mpz_class>> entries;
    std::vector<Partition> zero_set;

    bool degree_identity_holds() const;       // sum f * deg = n!/|P_n|
    bool conjugation_symmetry_holds() const;  // f(lambda) = f(lambda')
};

MultiplicityReport compute_report(unsigned p, std::uint64_t n, unsigned threads = 1);

/// Delta(p^k): all partitions of p^k except (p^k-1,1) and (2,1^{p^k-2}).
bool in_delta(const Partition& lambda, unsigned p, unsigned k);
std::vector<Partition> delta_set(unsigned p, unsigned k);

/// A(q,p^k) membership (exclusion lists; q = 2 excludes two extra shapes).
bool in_A(unsigned q, unsigned p, unsigned k, const Partition& lambda);

/// D(q,p^k) membership with a certifying tuple when positive: all
/// factors in Delta(p^k), not all equal, iterated LR multiplicity >= 1.
std::optional<std::vector<Partition>> in_D(unsigned q, unsigned p, unsigned k,
                                           const Partition& lambda);

struct ZeroSetScanResult {
    struct PerDegree {
        std::uint64_t n = 0;
        std::vector<Partition> zero_set;
        std::vector<Partition> expected;
        bool pass = false;
    };
    std::vector<PerDegree> degrees;
    bool pass = true;
};

/// Expected zero set of f at degree n per the exceptional lists
/// (empty unless n is a power of p, plus the small p = 3 cases).
std::vector<Partition> expected_zero_set(unsigned p, std::uint64_t n);

ZeroSetScanResult verify_zero_sets(unsigned p, std::uint64_t n_max, unsigned threads = 1);

struct DsetComparison {
    unsigned q = 0, p = 0, k = 0;
    bool equal = false;
    std::vector<Partition> in_A_not_D;
    std::vector<Partition> in_D_not_A;
    std::vector<std::pair<Partition, std::vector<Partition>>> witnesses;  // for D members
};

DsetComparison verify_D_equals_A(unsigned q, unsigned p, unsigned k);

/// Number of lambda |- n with f(lambda) > 0.
std::uint64_t constituent_count(unsigned p, std::uint64_t n, unsigned threads = 1);

/// Witness rows (lambda, gamma, delta) asserting gamma != delta, both in
/// Delta(p^k), and c^lambda_{gamma delta} >= 1.
struct WitnessRow {
    Partition lambda, gamma, delta;
    bool pass = false;
};

struct TableResult {
    std::vector<WitnessRow> rows;
    bool pass = true;
};

/// Instantiates the parameterized witness tables at p^k (supported: 9, 27)
/// and checks every row.
TableResult verify_witness_tables(unsigned p, unsigned k);

}  // namespace sylowchar

#endif
