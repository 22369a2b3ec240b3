#ifndef SYLOWCHAR_PARTITION_HPP
#define SYLOWCHAR_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylowchar {

/// A partition: weakly decreasing sequence of positive integers.
/// The empty partition (size 0) is a valid value. Doubles as a cycle type.
class Partition {
public:
    Partition() = default;

    /// Validates weak decrease and positivity; throws std::invalid_argument.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::uint64_t size() const { return size_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Row length, 0 past the last row (rows indexed from 0).
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Canonical order: lexicographically decreasing part sequences,
    /// so (n) sorts first and (1^n) last among partitions of n. This is
    /// the order enumerate_partitions produces.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<unsigned> parts_;
    std::uint64_t size_ = 0;
};

/// Skew shape [outer \ inner]; inner must fit inside outer and at least
/// one cell must remain.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::uint64_t cell_count() const { return outer_.size() - inner_.size(); }

private:
    Partition outer_;
    Partition inner_;
};

/// Base-p digits of n, least significant first.
struct PAdicExpansion {
    unsigned prime = 0;
    std::vector<unsigned> digits;

    unsigned digit_sum() const;
    std::uint64_t reconstruct() const;
};

Partition conjugate(const Partition& lambda);

/// True iff mu[i] <= lambda[i] for every row (diagram containment).
bool contains(const Partition& lambda, const Partition& mu);

/// All partitions of n in reverse lexicographic order: (n) first,
/// (1^n) last. n = 0 yields the empty partition only.
/// Throws if n exceeds the bound (default 60, see max_degree_bound()).
std::vector<Partition> enumerate_partitions(std::uint64_t n);
std::vector<Partition> enumerate_partitions(std::uint64_t n, std::uint64_t bound);

/// All mu with |mu| = m and [mu] inside [lambda].
std::vector<Partition> enumerate_subpartitions(const Partition& lambda, std::uint64_t m);

bool is_odd_prime(unsigned p);

/// p-adic expansion of n >= 1; p must be an odd prime.
PAdicExpansion p_adic(std::uint64_t n, unsigned p);

/// Accepts comma-separated parts with optional exponent notation a^b,
/// e.g. "2^4,1". "0" and "" both denote the empty partition.
Partition parse_partition(const std::string& text);

/// Canonical text form: comma-separated parts, exponents expanded.
/// The empty partition renders as "0".
std::string format_partition(const Partition& lambda);

/// Degree ceiling for scans; default 60, overridable via the
/// SYLOWCHAR_MAX_N environment variable.
std::uint64_t max_degree_bound();

}  // namespace sylowchar

#endif
