#include "sylowchar/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sylowchar {

std::vector<std::size_t> ResidueDecomposition::succ_order() const {
    std::vector<std::size_t> order(mu_parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (mu_parts[i].second != mu_parts[j].second)
            return mu_parts[i].second > mu_parts[j].second;
        return i > j;  // equal residues: larger index first
    });
    return order;
}

Partition ResidueDecomposition::reassemble() const {
    std::vector<unsigned> parts;
    for (auto [k, x] : mu_parts) parts.push_back(k * q + x);
    for (unsigned r : nu_quotients) parts.push_back(r * q);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

ResidueDecomposition residue_decompose(const Partition& lambda, unsigned q) {
    if (q < 2) throw std::invalid_argument("residue_decompose: q must be >= 2");
    if (lambda.size() % q != 0)
        throw std::invalid_argument("residue_decompose: q does not divide |lambda|");
    ResidueDecomposition d;
    d.q = q;
    unsigned residue_sum = 0;
    for (unsigned part : lambda.parts()) {
        unsigned x = part % q;
        if (x == 0) {
            d.nu_quotients.push_back(part / q);
        } else {
            d.mu_parts.emplace_back(part / q, x);
            residue_sum += x;
        }
    }
    d.zeta = residue_sum / q;  // exact: residues of a partition of qn sum to a multiple of q
    return d;
}

Partition omega(const Partition& lambda, unsigned q) {
    ResidueDecomposition d = residue_decompose(lambda, q);
    std::vector<std::size_t> order = d.succ_order();
    std::vector<unsigned> parts;
    for (std::size_t j = 0; j < order.size(); ++j) {
        auto [k, x] = d.mu_parts[order[j]];
        unsigned drop = (j < d.zeta) ? k + 1 : k;
        unsigned value = k * q + x - drop;
        if (value > 0) parts.push_back(value);
    }
    for (unsigned r : d.nu_quotients) parts.push_back(r * (q - 1));
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace sylowchar
