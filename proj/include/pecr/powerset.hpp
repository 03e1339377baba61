#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pecr {

// A finite frame of discernment. Subsets are addressed by bitmask:
// bit i set <=> the i-th label is in the subset. The frame is capped at
// 16 elements so dense 2^n arrays stay small.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    std::uint32_t subset_count() const { return 1u << size(); }
    std::uint32_t full_set() const { return subset_count() - 1; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Frame& other) const { return labels_ == other.labels_; }
    bool operator!=(const Frame& other) const { return !(*this == other); }

    // Human-readable subset key: labels joined by '|', "" for the empty set.
    std::string subset_name(std::uint32_t bits) const;
    // Inverse of subset_name; throws std::invalid_argument on unknown labels.
    std::uint32_t parse_subset(const std::string& key) const;

private:
    std::vector<std::string> labels_;
};

inline int cardinality(std::uint32_t bits) { return std::popcount(bits); }

// Exact binomial coefficient, 0 <= b <= a <= 16.
std::uint64_t binom(int a, int b);

// All subsets of cardinality t, ascending bitmask order.
std::vector<std::uint32_t> layer(const Frame& frame, int t);

// One-element supersets of F (the parent set in the belief evolution
// network). Empty for F = full set.
std::vector<std::uint32_t> parents(const Frame& frame, std::uint32_t f);

// In-place zeta transform over supersets: out[F] = sum_{G >= F} in[G].
// The *_serial variants are the reference implementations used by tests
// and the benchmark; the unsuffixed ones may use OpenMP.
void superset_sum_serial(std::span<double> values, int n);
void superset_sum(std::span<double> values, int n);
// Moebius inversion over supersets: recovers `in` from superset_sum(in).
void superset_mobius_serial(std::span<double> values, int n);
void superset_mobius(std::span<double> values, int n);
// Same pair over subsets: out[F] = sum_{G <= F} in[G].
void subset_sum_serial(std::span<double> values, int n);
void subset_sum(std::span<double> values, int n);
void subset_mobius_serial(std::span<double> values, int n);
void subset_mobius(std::span<double> values, int n);

}  // namespace pecr
