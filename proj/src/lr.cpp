#include "sylowchar/lr.hpp"

#include <algorithm>
#include <map>

#include "sylowchar/char_eval.hpp"

namespace sylowchar {

bool is_good_sequence(const std::vector<unsigned>& seq) {
    unsigned maxv = 0;
    for (unsigned v : seq) maxv = std::max(maxv, v);
    std::vector<std::uint64_t> counts(maxv + 2, 0);
    for (unsigned v : seq) {
        if (v == 0) return false;
        if (v > 1 && counts[v - 1] <= counts[v]) return false;
        ++counts[v];
    }
    return true;
}

namespace {

// Backtracking enumerator over the skew cells in reading order
// (right to left within a row, rows top to bottom). The lattice-word
// condition is maintained incrementally so bad branches die at once.
class Filler {
public:
    Filler(const SkewShape& gamma, const std::vector<unsigned>* type_bound)
        : outer_(gamma.outer()), inner_(gamma.inner()), type_(type_bound) {
        for (std::size_t r = 0; r < outer_.rows(); ++r) {
            grid_.emplace_back(outer_.part(r), 0u);
            for (unsigned c = outer_.part(r); c-- > inner_.part(r);)
                cells_.emplace_back(r, c);
        }
        counts_.assign(cells_.size() + 2, 0);
        word_.reserve(cells_.size());
    }

    std::uint64_t count = 0;
    bool stop_on_first = false;
    const std::function<void(const LRFilling&, const Partition&)>* visit = nullptr;

    void run() { rec(0); }

private:
    const Partition& outer_;
    const Partition& inner_;
    const std::vector<unsigned>* type_;
    std::vector<std::vector<unsigned>> grid_;
    std::vector<std::pair<std::size_t, unsigned>> cells_;
    std::vector<std::uint64_t> counts_;
    std::vector<unsigned> word_;
    bool done_ = false;

    void rec(std::size_t idx) {
        if (done_) return;
        if (idx == cells_.size()) {
            ++count;
            if (visit) {
                std::vector<unsigned> type_parts;
                for (unsigned v = 1; counts_[v] > 0; ++v)
                    type_parts.push_back(static_cast<unsigned>(counts_[v]));
                LRFilling filling{word_};
                (*visit)(filling, Partition(std::move(type_parts)));
            }
            if (stop_on_first) done_ = true;
            return;
        }
        auto [r, c] = cells_[idx];
        unsigned lo = 1;
        if (r > 0 && c >= inner_.part(r - 1) && c < outer_.part(r - 1))
            lo = grid_[r - 1][c] + 1;  // strict increase down the column
        unsigned hi = static_cast<unsigned>(cells_.size());
        if (c + 1 < outer_.part(r))
            hi = grid_[r][c + 1];  // weak increase along the row
        for (unsigned v = lo; v <= hi; ++v) {
            if (v > 1) {
                if (counts_[v - 1] == 0) break;  // lattice counts are weakly decreasing
                if (counts_[v - 1] <= counts_[v]) continue;
            }
            if (type_ && counts_[v] >= (v <= type_->size() ? (*type_)[v - 1] : 0)) continue;
            grid_[r][c] = v;
            ++counts_[v];
            word_.push_back(v);
            rec(idx + 1);
            word_.pop_back();
            --counts_[v];
            grid_[r][c] = 0;
            if (done_) return;
        }
    }
};

std::uint64_t fill_count(const Partition& lambda, const Partition& mu, const Partition& nu,
                         bool positivity_only) {
    if (lambda.size() != mu.size() + nu.size())
        throw std::invalid_argument("lr_coefficient: |lambda| != |mu| + |nu|");
    if (!contains(lambda, mu)) return 0;
    if (nu.empty()) return 1;  // mu == lambda here
    SkewShape gamma(lambda, mu);
    Filler filler(gamma, &nu.parts());
    filler.stop_on_first = positivity_only;
    filler.run();
    return filler.count;
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return fill_count(lambda, mu, nu, false);
}

bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return fill_count(lambda, mu, nu, true) > 0;
}

void for_each_lr_filling(const SkewShape& gamma,
                         const std::function<void(const LRFilling&, const Partition&)>& visit) {
    Filler filler(gamma, nullptr);
    filler.visit = &visit;
    filler.run();
}

std::vector<Partition> lr_types(const SkewShape& gamma) { return lr_types(gamma, 30); }

std::vector<Partition> lr_types(const SkewShape& gamma, std::uint64_t bound) {
    if (gamma.cell_count() > bound)
        throw std::invalid_argument("lr_types: skew shape exceeds cell bound");
    std::vector<Partition> types;
    for_each_lr_filling(gamma, [&](const LRFilling&, const Partition& type) {
        types.push_back(type);
    });
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    return types;
}

ShapeClass unique_filling_classification(const SkewShape& gamma) {
    const Partition& outer = gamma.outer();
    const Partition& inner = gamma.inner();
    std::vector<std::pair<unsigned, unsigned>> rows;  // (left edge, length) of nonempty rows
    std::size_t first = outer.rows(), last = 0;
    for (std::size_t r = 0; r < outer.rows(); ++r) {
        if (outer.part(r) > inner.part(r)) {
            if (rows.empty()) first = r;
            last = r;
            rows.emplace_back(inner.part(r), outer.part(r) - inner.part(r));
        }
    }
    bool consecutive = (last - first + 1 == rows.size());
    if (consecutive) {
        bool straight = true, rotated = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].first != rows[0].first) straight = false;
            if (i + 1 < rows.size()) {
                if (rows[i].second < rows[i + 1].second) straight = false;
                if (rows[i].second > rows[i + 1].second) rotated = false;
            }
            // Rotated case: right edges aligned.
            if (rows[i].first + rows[i].second != rows[0].first + rows[0].second) rotated = false;
        }
        if (straight) return ShapeClass::straight;
        if (rotated) return ShapeClass::rotated_straight;
    }
    return ShapeClass::multiple;
}

namespace {

std::uint64_t iter_count(const Partition& lambda, const std::vector<Partition>& factors,
                         std::size_t depth,
                         std::map<std::pair<Partition, std::size_t>, std::uint64_t>& memo) {
    if (depth == 0) return lambda.empty() ? 1 : 0;
    if (depth == 1) return lambda == factors[0] ? 1 : 0;
    auto key = std::make_pair(lambda, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Partition& nu = factors[depth - 1];
    std::uint64_t total = 0;
    for (const Partition& mu : enumerate_subpartitions(lambda, lambda.size() - nu.size())) {
        std::uint64_t c = lr_coefficient(lambda, mu, nu);
        if (c) total += c * iter_count(mu, factors, depth - 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::uint64_t iterated_lr_multiplicity(const Partition& lambda,
                                       const std::vector<Partition>& factors) {
    std::uint64_t total = 0;
    for (const Partition& f : factors) total += f.size();
    if (total != lambda.size())
        throw std::invalid_argument("iterated_lr_multiplicity: sizes do not sum to |lambda|");
    std::map<std::pair<Partition, std::size_t>, std::uint64_t> memo;
    return iter_count(lambda, factors, factors.size(), memo);
}

namespace {

bool iter_pos(const Partition& lambda, const std::vector<Partition>& factors, std::size_t depth,
              std::map<std::pair<Partition, std::size_t>, bool>& memo) {
    if (depth == 0) return lambda.empty();
    if (depth == 1) return lambda == factors[0];
    auto key = std::make_pair(lambda, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Partition& nu = factors[depth - 1];
    bool found = false;
    for (const Partition& mu : enumerate_subpartitions(lambda, lambda.size() - nu.size())) {
        if (lr_positive(lambda, mu, nu) && iter_pos(mu, factors, depth - 1, memo)) {
            found = true;
            break;
        }
    }
    memo.emplace(std::move(key), found);
    return found;
}

}  // namespace

bool iterated_lr_positive(const Partition& lambda, const std::vector<Partition>& factors) {
    std::uint64_t total = 0;
    for (const Partition& f : factors) total += f.size();
    if (total != lambda.size())
        throw std::invalid_argument("iterated_lr_positive: sizes do not sum to |lambda|");
    std::map<std::pair<Partition, std::size_t>, bool> memo;
    return iter_pos(lambda, factors, factors.size(), memo);
}

std::uint64_t restriction_oracle(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
    const std::uint64_t n = lambda.size(), m = mu.size();
    if (n != m + nu.size())
        throw std::invalid_argument("restriction_oracle: |lambda| != |mu| + |nu|");
    if (n > 12)
        throw std::invalid_argument("restriction_oracle: bound exceeded (n <= 12)");
    MnCache cache;
    mpz_class sum = 0;
    for (const Partition& a : enumerate_partitions(m)) {
        mpz_class za = class_size(a);
        mpz_class chi_mu = cache.character(mu, a);
        if (chi_mu == 0) continue;
        for (const Partition& b : enumerate_partitions(n - m)) {
            mpz_class chi_nu = cache.character(nu, b);
            if (chi_nu == 0) continue;
            std::vector<unsigned> joint = a.parts();
            joint.insert(joint.end(), b.parts().begin(), b.parts().end());
            std::sort(joint.rbegin(), joint.rend());
            mpz_class chi_l = cache.character(lambda, Partition(std::move(joint)));
            if (chi_l == 0) continue;
            sum += za * class_size(b) * chi_l * chi_mu * chi_nu;
        }
    }
    mpz_class group = factorial(m) * factorial(n - m);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), group.get_mpz_t());
    return out.get_ui();
}

}  // namespace sylowchar
