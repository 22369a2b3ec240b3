#include "sylowchar/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "sylowchar/lr.hpp"

namespace sylowchar {

mpz_class trivial_multiplicity(const ClassDistribution& dist, const Partition& lambda,
                               MnCache& cache) {
    if (lambda.size() != dist.degree)
        throw std::invalid_argument("trivial_multiplicity: |lambda| != degree");
    mpz_class sum = 0;
    for (const auto& [type, count] : dist.counts) {
        mpz_class chi = cache.character(lambda, type);
        if (chi != 0) sum += count * chi;
    }
    mpz_class order = sylow_order(dist.prime, dist.degree);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("trivial_multiplicity: character sum not divisible by |P_n|");
    if (quot < 0)
        throw std::logic_error("trivial_multiplicity: negative multiplicity");
    return quot;
}

mpz_class trivial_multiplicity(unsigned p, const Partition& lambda) {
    ClassDistribution dist = distribution(p, lambda.size());
    MnCache cache;
    return trivial_multiplicity(dist, lambda, cache);
}

bool MultiplicityReport::degree_identity_holds() const {
    mpz_class sum = 0;
    for (const auto& [lambda, f] : entries) sum += f * sylowchar::degree(lambda);
    mpz_class expected;
    mpz_class order = sylow_order(prime, degree);
    mpz_divexact(expected.get_mpz_t(), factorial(degree).get_mpz_t(), order.get_mpz_t());
    return sum == expected;
}

bool MultiplicityReport::conjugation_symmetry_holds() const {
    std::map<Partition, mpz_class> table;
    for (const auto& [lambda, f] : entries) table.emplace(lambda, f);
    for (const auto& [lambda, f] : entries)
        if (table.at(conjugate(lambda)) != f) return false;
    return true;
}

MultiplicityReport compute_report(unsigned p, std::uint64_t n, unsigned threads) {
    MultiplicityReport report;
    report.prime = p;
    report.degree = n;
    ClassDistribution dist = distribution(p, n);
    std::vector<Partition> all = enumerate_partitions(n);
    std::vector<mpz_class> values(all.size());

    if (threads == 0) threads = 1;
    threads = std::min<std::size_t>(threads, all.size() ? all.size() : 1);
    auto worker = [&](std::size_t begin, std::size_t end) {
        MnCache cache;  // per-thread cache, no shared mutable state
        for (std::size_t i = begin; i < end; ++i)
            values[i] = trivial_multiplicity(dist, all[i], cache);
    };
    if (threads <= 1) {
        worker(0, all.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (all.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(all.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < all.size(); ++i) {
        if (values[i] == 0) report.zero_set.push_back(all[i]);
        report.entries.emplace_back(std::move(all[i]), std::move(values[i]));
    }
    return report;
}

namespace {

std::uint64_t pow_u64(unsigned p, unsigned k) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) n *= p;
    return n;
}

// (a^i, b^j, ...) with zero repeat counts skipped.
Partition make_shape(std::initializer_list<std::pair<unsigned, unsigned>> runs) {
    std::vector<unsigned> parts;
    for (auto [value, repeat] : runs)
        for (unsigned i = 0; i < repeat; ++i) parts.push_back(value);
    return Partition(std::move(parts));
}

Partition hook(std::uint64_t arm_plus_one, std::uint64_t total) {
    // (arm_plus_one, 1^{total - arm_plus_one})
    return make_shape({{static_cast<unsigned>(arm_plus_one), 1},
                       {1, static_cast<unsigned>(total - arm_plus_one)}});
}

}  // namespace

bool in_delta(const Partition& lambda, unsigned p, unsigned k) {
    std::uint64_t n = pow_u64(p, k);
    if (lambda.size() != n)
        throw std::invalid_argument("in_delta: |lambda| != p^k");
    if (n < 2) return true;
    return lambda != hook(n - 1, n) && lambda != make_shape({{2, 1}, {1, static_cast<unsigned>(n - 2)}});
}

std::vector<Partition> delta_set(unsigned p, unsigned k) {
    std::vector<Partition> out;
    for (Partition& lambda : enumerate_partitions(pow_u64(p, k)))
        if (in_delta(lambda, p, k)) out.push_back(std::move(lambda));
    return out;
}

bool in_A(unsigned q, unsigned p, unsigned k, const Partition& lambda) {
    if (q < 2 || q > p)
        throw std::invalid_argument("in_A: q must satisfy 2 <= q <= p");
    std::uint64_t n = pow_u64(p, k);
    std::uint64_t qn = q * n;
    if (lambda.size() != qn)
        throw std::invalid_argument("in_A: |lambda| != q * p^k");
    auto u = [](std::uint64_t v) { return static_cast<unsigned>(v); };
    if (lambda == make_shape({{u(qn), 1}})) return false;
    if (lambda == hook(qn - 1, qn)) return false;
    if (lambda == make_shape({{2, 1}, {1, u(qn - 2)}})) return false;
    if (lambda == make_shape({{1, u(qn)}})) return false;
    if (q == 2) {
        if (lambda == make_shape({{u(n), 2}})) return false;
        if (lambda == make_shape({{2, u(n)}})) return false;
    }
    return true;
}

namespace {

// Search for a certifying tuple: iterates candidate multisets over
// Delta(p^k), peeling one factor at a time via LR positivity. Subtree
// results are memoized on (shape, remaining factor multiset) so the
// candidate multisets share work.
class DWitnessSearch {
public:
    DWitnessSearch(unsigned q, unsigned p, unsigned k)
        : q_(q), block_(pow_u64(p, k)), delta_(delta_set(p, k)) {}

    std::optional<std::vector<Partition>> search(const Partition& lambda) {
        for (const std::vector<std::size_t>& multiset : candidate_multisets()) {
            if (restricts(lambda, multiset)) {
                std::vector<Partition> witness;
                for (std::size_t i : multiset) witness.push_back(delta_[i]);
                return witness;
            }
        }
        return std::nullopt;
    }

private:
    unsigned q_;
    std::uint64_t block_;
    std::vector<Partition> delta_;
    std::map<std::pair<Partition, std::vector<std::size_t>>, bool> memo_;
    std::vector<std::vector<std::size_t>> multisets_;

    const std::vector<std::vector<std::size_t>>& candidate_multisets() {
        if (!multisets_.empty()) return multisets_;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == q_) {
                if (cur.front() != cur.back())  // exclude the all-equal diagonal
                    multisets_.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < delta_.size(); ++i) {
                cur.push_back(i);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        // Row and column shapes peel cheaply; try multisets containing
        // them first. Canonical order puts (p^k) first, (1^{p^k}) last.
        std::stable_sort(multisets_.begin(), multisets_.end(),
                         [&](const auto& a, const auto& b) {
                             auto score = [&](const std::vector<std::size_t>& m) {
                                 int s = 0;
                                 for (std::size_t i : m)
                                     if (i == 0 || i == delta_.size() - 1) ++s;
                                 return s;
                             };
                             return score(a) > score(b);
                         });
        return multisets_;
    }

    bool restricts(const Partition& lambda, const std::vector<std::size_t>& multiset) {
        if (multiset.size() == 1) return lambda == delta_[multiset[0]];
        auto key = std::make_pair(lambda, multiset);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Partition& nu = delta_[multiset.back()];
        bool found = false;
        if (multiset.size() == 2) {
            found = lr_positive(lambda, delta_[multiset[0]], nu);
        } else {
            std::vector<std::size_t> rest(multiset.begin(), multiset.end() - 1);
            for (const Partition& mu : enumerate_subpartitions(lambda, lambda.size() - block_)) {
                if (lr_positive(lambda, mu, nu) && restricts(mu, rest)) {
                    found = true;
                    break;
                }
            }
        }
        memo_.emplace(std::move(key), found);
        return found;
    }
};

}  // namespace

std::optional<std::vector<Partition>> in_D(unsigned q, unsigned p, unsigned k,
                                           const Partition& lambda) {
    if (q < 2 || q > p)
        throw std::invalid_argument("in_D: q must satisfy 2 <= q <= p");
    if (lambda.size() != q * pow_u64(p, k))
        throw std::invalid_argument("in_D: |lambda| != q * p^k");
    DWitnessSearch search(q, p, k);
    return search.search(lambda);
}

std::vector<Partition> expected_zero_set(unsigned p, std::uint64_t n) {
    std::vector<Partition> out;
    auto u = [](std::uint64_t v) { return static_cast<unsigned>(v); };
    if (p == 3) {
        switch (n) {
            case 3: return {parse_partition("2,1")};
            case 4: return {parse_partition("2,2")};
            case 6: return {parse_partition("3,2,1")};
            case 9:
                return {parse_partition("8,1"),      parse_partition("5,4"),
                        parse_partition("4,3,2"),    parse_partition("3,3,2,1"),
                        parse_partition("2^4,1"),    parse_partition("2,1^7")};
            case 10: return {parse_partition("5,5"), parse_partition("2^5")};
            default: break;
        }
    }
    for (std::uint64_t pk = p; pk <= n; pk *= p) {
        if (pk == n) {
            out.push_back(hook(n - 1, n));
            Partition col_hook = make_shape({{2, 1}, {1, u(n - 2)}});
            if (col_hook != out.back()) out.push_back(std::move(col_hook));
            break;
        }
        if (pk > n / p) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZeroSetScanResult verify_zero_sets(unsigned p, std::uint64_t n_max, unsigned threads) {
    ZeroSetScanResult result;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        ZeroSetScanResult::PerDegree entry;
        entry.n = n;
        entry.zero_set = compute_report(p, n, threads).zero_set;
        entry.expected = expected_zero_set(p, n);
        entry.pass = entry.zero_set == entry.expected;
        if (!entry.pass) result.pass = false;
        result.degrees.push_back(std::move(entry));
    }
    return result;
}

DsetComparison verify_D_equals_A(unsigned q, unsigned p, unsigned k) {
    DsetComparison cmp;
    cmp.q = q;
    cmp.p = p;
    cmp.k = k;
    DWitnessSearch search(q, p, k);
    for (const Partition& lambda : enumerate_partitions(q * pow_u64(p, k))) {
        bool a = in_A(q, p, k, lambda);
        auto witness = search.search(lambda);
        if (witness) cmp.witnesses.emplace_back(lambda, *witness);
        if (a && !witness) cmp.in_A_not_D.push_back(lambda);
        if (!a && witness) cmp.in_D_not_A.push_back(lambda);
    }
    cmp.equal = cmp.in_A_not_D.empty() && cmp.in_D_not_A.empty();
    return cmp;
}

std::uint64_t constituent_count(unsigned p, std::uint64_t n, unsigned threads) {
    MultiplicityReport report = compute_report(p, n, threads);
    return report.entries.size() - report.zero_set.size();
}

TableResult verify_witness_tables(unsigned p, unsigned k) {
    std::uint64_t n64 = pow_u64(p, k);
    if (n64 != 9 && n64 != 27)
        throw std::invalid_argument("verify_witness_tables: supported at p^k in {9, 27}");
    unsigned N = static_cast<unsigned>(n64);

    struct Row {
        Partition lambda, gamma, delta;
    };
    std::vector<Row> rows;
    auto add = [&](Partition lambda, Partition gamma, Partition delta) {
        rows.push_back({std::move(lambda), std::move(gamma), std::move(delta)});
    };

    // Rows parameterized by N = p^k: the lambda with a narrow image
    // under the halving operator, each with an explicit LR witness pair.
    Partition g321 = make_shape({{3, 1}, {2, 1}, {1, N - 5}});
    Partition g41 = make_shape({{4, 1}, {1, N - 4}});
    Partition g31 = make_shape({{3, 1}, {1, N - 3}});
    Partition g221 = make_shape({{2, 2}, {1, N - 4}});
    Partition g421 = make_shape({{4, 1}, {2, 1}, {1, N - 6}});
    Partition g3221 = make_shape({{3, 1}, {2, 2}, {1, N - 7}});
    Partition g2221 = make_shape({{2, 3}, {1, N - 6}});

    add(make_shape({{5, 1}, {3, 1}, {2, N - 4}}), g321, g41);
    add(make_shape({{6, 1}, {2, N - 3}}), g321, g41);
    add(make_shape({{6, 1}, {2, N - 4}, {1, 2}}), g41, g31);
    add(make_shape({{5, 1}, {3, 1}, {2, N - 5}, {1, 2}}), g321, g31);
    add(make_shape({{5, 1}, {2, N - 3}, {1, 1}}), g321, g31);

    add(make_shape({{3, 2}, {2, N - 3}}), g221, g321);
    add(make_shape({{5, 1}, {3, 1}, {2, N - 4}}), g221, g321);
    add(make_shape({{4, 2}, {2, N - 4}}), g321, g421);
    add(make_shape({{4, 1}, {3, 2}, {2, N - 5}}), g321, g421);
    add(make_shape({{3, 4}, {2, N - 6}}), g321, g3221);

    add(make_shape({{5, 1}, {3, 1}, {2, N - 5}, {1, 2}}), g321, g31);
    add(make_shape({{4, 2}, {2, N - 5}, {1, 2}}), g321, g31);
    add(make_shape({{4, 1}, {3, 2}, {2, N - 6}, {1, 2}}), g321, g31);
    add(make_shape({{4, 1}, {3, 1}, {2, N - 4}, {1, 1}}), g321, g31);
    add(make_shape({{3, 3}, {2, N - 5}, {1, 1}}), g321, g31);
    add(make_shape({{3, 4}, {2, N - 7}, {1, 2}}), g321, g2221);

    add(make_shape({{2, N - 1}, {1, 2}}), g221, g2221);
    add(make_shape({{3, 1}, {2, N - 2}, {1, 1}}), g31, g221);
    add(make_shape({{N - 1, 1}, {1, N + 1}}), make_shape({{N - 2, 1}, {1, 2}}),
        make_shape({{1, N}}));
    add(make_shape({{N - 1, 1}, {2, 1}, {1, N - 1}}), make_shape({{N - 2, 1}, {2, 1}}),
        make_shape({{1, N}}));
    add(make_shape({{N, 1}, {2, 1}, {1, N - 2}}), make_shape({{N - 2, 1}, {2, 1}}), g31);

    TableResult result;
    for (Row& row : rows) {
        WitnessRow out{row.lambda, row.gamma, row.delta, false};
        out.pass = row.gamma != row.delta && in_delta(row.gamma, p, k) &&
                   in_delta(row.delta, p, k) && lr_positive(row.lambda, row.gamma, row.delta);
        if (!out.pass) result.pass = false;
        result.rows.push_back(std::move(out));
    }
    return result;
}

}  // namespace sylowchar
