#include "sylowchar/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace sylowchar {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const auto& x = a.parts_;
    const auto& y = b.parts_;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i] != y[i]) return y[i] <=> x[i];
    }
    return x.size() <=> y.size();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("skew shape: inner does not fit inside outer");
    if (outer_.size() == inner_.size())
        throw std::invalid_argument("skew shape must contain at least one cell");
}

unsigned PAdicExpansion::digit_sum() const {
    return std::accumulate(digits.begin(), digits.end(), 0u);
}

std::uint64_t PAdicExpansion::reconstruct() const {
    std::uint64_t n = 0, pw = 1;
    for (unsigned d : digits) {
        n += d * pw;
        pw *= prime;
    }
    return n;
}

Partition conjugate(const Partition& lambda) {
    std::vector<unsigned> out;
    if (!lambda.empty()) {
        out.resize(lambda.parts()[0], 0);
        for (unsigned p : lambda.parts())
            for (unsigned j = 0; j < p; ++j) ++out[j];
    }
    return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (std::size_t i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

std::uint64_t max_degree_bound() {
    if (const char* s = std::getenv("SYLOWCHAR_MAX_N")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 60;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n) {
    return enumerate_partitions(n, max_degree_bound());
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, std::uint64_t bound) {
    if (n > bound)
        throw std::invalid_argument("enumerate_partitions: n exceeds bound");
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // DFS in reverse lexicographic order: largest feasible part first.
    auto rec = [&](auto&& self, std::uint64_t rem, unsigned maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        unsigned top = static_cast<unsigned>(std::min<std::uint64_t>(rem, maxpart));
        for (unsigned p = top; p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n > 0 ? static_cast<unsigned>(n) : 1u);
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& lambda, std::uint64_t m) {
    std::vector<Partition> out;
    if (m > lambda.size()) return out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, std::size_t row, std::uint64_t rem, unsigned prev) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row >= lambda.rows()) return;
        // Cheap feasibility: remaining rows cannot hold rem cells.
        std::uint64_t cap = 0;
        for (std::size_t r = row; r < lambda.rows() && cap < rem; ++r)
            cap += std::min(lambda.part(r), prev);
        if (cap < rem) return;
        unsigned top = std::min(lambda.part(row), prev);
        for (unsigned p = std::min<std::uint64_t>(top, rem); p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, rem - p, p);
            cur.pop_back();
        }
        // Stopping here (no part in this row) means no further rows either.
    };
    rec(rec, 0, m, lambda.empty() ? 0u : lambda.parts()[0]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_odd_prime(unsigned p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PAdicExpansion p_adic(std::uint64_t n, unsigned p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("p_adic: p must be an odd prime");
    if (n == 0)
        throw std::invalid_argument("p_adic: n must be positive");
    PAdicExpansion e;
    e.prime = p;
    while (n > 0) {
        e.digits.push_back(static_cast<unsigned>(n % p));
        n /= p;
    }
    return e;
}

Partition parse_partition(const std::string& text) {
    std::vector<unsigned> parts;
    if (text.empty() || text == "0") return Partition();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("parse_partition: empty component");
        unsigned long base = 0, exp = 1;
        std::size_t caret = tok.find('^');
        std::size_t pos = 0;
        try {
            if (caret == std::string::npos) {
                base = std::stoul(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument("trailing junk");
            } else {
                base = std::stoul(tok.substr(0, caret), &pos);
                if (pos != caret) throw std::invalid_argument("trailing junk");
                std::string e = tok.substr(caret + 1);
                exp = std::stoul(e, &pos);
                if (pos != e.size()) throw std::invalid_argument("trailing junk");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: malformed part '" + tok + "'");
        }
        if (base == 0 || base > 0xffffffffull)
            throw std::invalid_argument("parse_partition: part out of range");
        for (unsigned long i = 0; i < exp; ++i)
            parts.push_back(static_cast<unsigned>(base));
    }
    return Partition(std::move(parts));  // rejects increasing sequences
}

std::string format_partition(const Partition& lambda) {
    if (lambda.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < lambda.rows(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

}  // namespace sylowchar
