#include "sylowchar/char_eval.hpp"

#include <algorithm>

namespace sylowchar {

namespace {

// First-column beta numbers of a partition, strictly decreasing.
std::vector<long> beta_set(const std::vector<unsigned>& parts) {
    const long r = static_cast<long>(parts.size());
    std::vector<long> beta(parts.size());
    for (long i = 0; i < r; ++i) beta[i] = static_cast<long>(parts[i]) + (r - 1 - i);
    return beta;
}

std::vector<unsigned> partition_from_beta(std::vector<long> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const long r = static_cast<long>(beta.size());
    std::vector<unsigned> parts;
    for (long i = 0; i < r; ++i) {
        long p = beta[i] - (r - 1 - i);
        if (p > 0) parts.push_back(static_cast<unsigned>(p));
    }
    return parts;
}

}  // namespace

mpz_class MnCache::eval(std::vector<unsigned> shape, const std::vector<unsigned>& cycles,
                        std::size_t next) {
    if (next == cycles.size()) return 1;  // shape is empty here
    auto key = std::make_pair(shape, std::vector<unsigned>(cycles.begin() + next, cycles.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const long hook = static_cast<long>(cycles[next]);
    std::vector<long> beta = beta_set(shape);
    mpz_class total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long target = beta[i] - hook;
        if (target < 0) continue;
        bool occupied = false;
        int leg = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++leg;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[i] = target;
        mpz_class sub = eval(partition_from_beta(std::move(nb)), cycles, next + 1);
        if (leg % 2) total -= sub; else total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

mpz_class MnCache::character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("mn_character: |lambda| != |cycle type|");
    return eval(lambda.parts(), cycle_type.parts(), 0);
}

mpz_class mn_character(const Partition& lambda, const Partition& cycle_type) {
    MnCache cache;
    return cache.character(lambda, cycle_type);
}

mpz_class factorial(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class degree(const Partition& lambda) {
    const auto& parts = lambda.parts();
    Partition conj = conjugate(lambda);
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (unsigned j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj.part(j) - i) - 1;
    mpz_class num = factorial(lambda.size());
    mpz_class deg;
    mpz_divexact(deg.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    return deg;
}

mpz_class centralizer_order(const Partition& cycle_type) {
    mpz_class z = 1;
    const auto& parts = cycle_type.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        std::uint64_t mult = j - i;
        for (std::uint64_t m = 0; m < mult; ++m) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

mpz_class class_size(const Partition& cycle_type) {
    mpz_class num = factorial(cycle_type.size());
    mpz_class z = centralizer_order(cycle_type);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
    return out;
}

}  // namespace sylowchar
