#include "pecr/powerset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pecr {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > 16)
        throw std::invalid_argument("frame must have between 1 and 16 elements");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw std::invalid_argument("frame labels must be non-empty");
        if (l.find('|') != std::string::npos)
            throw std::invalid_argument("frame labels must not contain '|': " + l);
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate frame label: " + l);
    }
}

std::string Frame::subset_name(std::uint32_t bits) const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (bits & (1u << i)) {
            if (!out.empty()) out += '|';
            out += labels_[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::uint32_t Frame::parse_subset(const std::string& key) const {
    if (key.empty()) return 0;
    std::uint32_t bits = 0;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '|')) {
        auto it = std::find(labels_.begin(), labels_.end(), part);
        if (it == labels_.end())
            throw std::invalid_argument("unknown frame label: '" + part + "'");
        bits |= 1u << (it - labels_.begin());
    }
    return bits;
}

std::uint64_t binom(int a, int b) {
    if (b < 0 || b > a || a > 16)
        throw std::domain_error("binom: require 0 <= b <= a <= 16");
    // Pascal recurrence, exact in 64 bits for a <= 16.
    std::uint64_t c = 1;
    for (int i = 0; i < b; ++i) c = c * static_cast<std::uint64_t>(a - i) / (i + 1);
    return c;
}

std::vector<std::uint32_t> layer(const Frame& frame, int t) {
    if (t < 0 || t > frame.size())
        throw std::domain_error("layer: cardinality out of range");
    std::vector<std::uint32_t> out;
    out.reserve(binom(frame.size(), t));
    for (std::uint32_t f = 0; f < frame.subset_count(); ++f)
        if (cardinality(f) == t) out.push_back(f);
    return out;
}

std::vector<std::uint32_t> parents(const Frame& frame, std::uint32_t f) {
    std::vector<std::uint32_t> out;
    for (int i = 0; i < frame.size(); ++i) {
        std::uint32_t bit = 1u << i;
        if (!(f & bit)) out.push_back(f | bit);
    }
    return out;
}

namespace {

// Yate-style butterfly shared by all four transforms. `down` selects the
// subset (true) or superset direction, `sign` +1 for the sum, -1 for the
// Moebius inverse. Parallel over the half-lattice per bit when enabled.
template <bool Parallel>
void butterfly(std::span<double> v, int n, bool down, double sign) {
    const std::int64_t size = std::int64_t{1} << n;
    if (static_cast<std::int64_t>(v.size()) != size)
        throw std::invalid_argument("transform: value count must be 2^n");
    for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = 1u << i;
#ifdef _OPENMP
#pragma omp parallel for if (Parallel && size >= (1 << 12))
#endif
        for (std::int64_t f = 0; f < size; ++f) {
            if (f & bit) {
                if (down)
                    v[static_cast<std::size_t>(f)] += sign * v[static_cast<std::size_t>(f ^ bit)];
                else
                    v[static_cast<std::size_t>(f ^ bit)] += sign * v[static_cast<std::size_t>(f)];
            }
        }
    }
}

}  // namespace

void superset_sum_serial(std::span<double> v, int n) { butterfly<false>(v, n, false, 1.0); }
void superset_sum(std::span<double> v, int n) { butterfly<true>(v, n, false, 1.0); }
void superset_mobius_serial(std::span<double> v, int n) { butterfly<false>(v, n, false, -1.0); }
void superset_mobius(std::span<double> v, int n) { butterfly<true>(v, n, false, -1.0); }
void subset_sum_serial(std::span<double> v, int n) { butterfly<false>(v, n, true, 1.0); }
void subset_sum(std::span<double> v, int n) { butterfly<true>(v, n, true, 1.0); }
void subset_mobius_serial(std::span<double> v, int n) { butterfly<false>(v, n, true, -1.0); }
void subset_mobius(std::span<double> v, int n) { butterfly<true>(v, n, true, -1.0); }

}  // namespace pecr
