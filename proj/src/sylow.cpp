#include "sylowchar/sylow.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace sylowchar {

mpz_class ClassDistribution::total() const {
    mpz_class t = 0;
    for (const auto& [type, count] : counts) t += count;
    return t;
}

mpz_class sylow_order(unsigned p, std::uint64_t n) {
    if (!is_odd_prime(p)) throw std::invalid_argument("sylow_order: p must be an odd prime");
    std::uint64_t exponent = 0;
    for (std::uint64_t pw = p; pw <= n; pw *= p) {
        exponent += n / pw;
        if (pw > n / p) break;  // overflow guard
    }
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), p, static_cast<unsigned long>(exponent));
    return order;
}

namespace {

// Cycle types as multiplicity vectors over powers of p: entry i counts
// cycles of length p^i. Convolution of disjoint supports is entrywise
// addition with counts multiplied.
using MultVec = std::vector<std::uint32_t>;
using Dist = std::map<MultVec, mpz_class>;

Dist convolve(const Dist& a, const Dist& b) {
    Dist out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            MultVec m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            out[m] += ca * cb;
        }
    }
    return out;
}

// Recursion over P_{p^k} = P_{p^{k-1}} wr P_p. With the top component
// trivial the p base elements contribute independently; with the top
// component one of the p-1 nontrivial elements of the cyclic top group,
// the cycle product of the p base elements is uniform on P_{p^{k-1}}
// (product of independent uniform elements), and every cycle length is
// multiplied by p. The enumeration oracle cross-checks this argument.
Dist prime_power_dist_internal(unsigned p, unsigned k) {
    Dist d;
    d[{1}] = 1;  // P_1: one fixed point
    mpz_class base_order = 1;
    for (unsigned level = 1; level <= k; ++level) {
        Dist top_trivial = d;
        for (unsigned copy = 1; copy < p; ++copy) top_trivial = convolve(top_trivial, d);
        mpz_class weight = (p - 1);
        for (unsigned copy = 1; copy < p; ++copy) weight *= base_order;
        Dist next = std::move(top_trivial);
        for (const auto& [m, c] : d) {
            MultVec shifted(m.size() + 1, 0);
            for (std::size_t i = 0; i < m.size(); ++i) shifted[i + 1] = m[i];
            next[shifted] += weight * c;
        }
        d = std::move(next);
        mpz_class new_order = p;  // |P_{p^level}| = |P_{p^{level-1}}|^p * p
        for (unsigned copy = 0; copy < p; ++copy) new_order *= base_order;
        base_order = std::move(new_order);
    }
    return d;
}

Partition type_from_multvec(unsigned p, const MultVec& m) {
    std::vector<unsigned> parts;
    std::uint64_t pw = 1;
    std::vector<std::uint64_t> lengths;
    for (std::size_t i = 0; i < m.size(); ++i) {
        lengths.push_back(pw);
        pw *= p;
    }
    for (std::size_t i = m.size(); i-- > 0;)
        for (std::uint32_t j = 0; j < m[i]; ++j)
            parts.push_back(static_cast<unsigned>(lengths[i]));
    return Partition(std::move(parts));
}

ClassDistribution to_public(unsigned p, std::uint64_t n, const Dist& d) {
    ClassDistribution out;
    out.prime = p;
    out.degree = n;
    for (const auto& [m, c] : d) out.counts.emplace(type_from_multvec(p, m), c);
    return out;
}

Dist internal_distribution(unsigned p, std::uint64_t n) {
    PAdicExpansion digits = p_adic(n, p);
    Dist acc;
    acc[{}] = 1;
    for (std::size_t i = 0; i < digits.digits.size(); ++i) {
        if (digits.digits[i] == 0) continue;
        Dist level = prime_power_dist_internal(p, static_cast<unsigned>(i));
        for (unsigned copy = 0; copy < digits.digits[i]; ++copy) acc = convolve(acc, level);
    }
    return acc;
}

}  // namespace

ClassDistribution prime_power_distribution(unsigned p, unsigned k) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("prime_power_distribution: p must be an odd prime");
    std::uint64_t deg = 1;
    for (unsigned i = 0; i < k; ++i) deg *= p;
    if (deg > 243)
        throw std::invalid_argument("prime_power_distribution: p^k exceeds bound 243");
    return to_public(p, deg, prime_power_dist_internal(p, k));
}

ClassDistribution distribution(unsigned p, std::uint64_t n) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("distribution: p must be an odd prime");
    if (n == 0 || n > max_degree_bound())
        throw std::invalid_argument("distribution: n out of bounds");
    return to_public(p, n, internal_distribution(p, n));
}

namespace {

using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t n) {
    Perm e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(i);
    return e;
}

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

// Generators of P_{p^k} acting on {0, ..., p^k - 1}: generators of the
// base group on the first block plus the block p-cycle.
void prime_power_generators(unsigned p, unsigned k, std::size_t n, std::size_t offset,
                            std::vector<Perm>& gens) {
    if (k == 0) return;
    std::uint64_t deg = 1;
    for (unsigned i = 0; i < k; ++i) deg *= p;
    std::uint64_t block = deg / p;
    prime_power_generators(p, k - 1, n, offset, gens);
    Perm t = identity_perm(n);
    for (std::uint64_t x = 0; x < deg; ++x)
        t[offset + x] = static_cast<std::uint16_t>(offset + (x + block) % deg);
    gens.push_back(std::move(t));
}

Partition cycle_type_of(const Perm& g) {
    std::vector<bool> seen(g.size(), false);
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = g[x];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace

ClassDistribution enumeration_oracle(unsigned p, std::uint64_t n) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("enumeration_oracle: p must be an odd prime");
    mpz_class order = sylow_order(p, n);
    if (order > 1000000)
        throw std::invalid_argument("enumeration_oracle: |P_n| exceeds 10^6");

    std::vector<Perm> gens;
    PAdicExpansion digits = p_adic(n, p);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < digits.digits.size(); ++i) {
        std::uint64_t deg = 1;
        for (std::size_t j = 0; j < i; ++j) deg *= p;
        for (unsigned copy = 0; copy < digits.digits[i]; ++copy) {
            prime_power_generators(p, static_cast<unsigned>(i), n, offset, gens);
            offset += deg;
        }
    }

    std::set<Perm> elements;
    std::vector<Perm> frontier{identity_perm(n)};
    elements.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& g : frontier) {
            for (const Perm& s : gens) {
                Perm h = compose(s, g);
                if (elements.insert(h).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }

    ClassDistribution out;
    out.prime = p;
    out.degree = n;
    for (const Perm& g : elements) out.counts[cycle_type_of(g)] += 1;
    return out;
}

}  // namespace sylowchar
