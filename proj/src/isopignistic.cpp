#include "pecr/isopignistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pecr {

namespace {

constexpr double kIsoDomainTol = 1e-8;

int singleton_index(std::uint32_t f) { return std::countr_zero(f); }

}  // namespace

std::vector<double> RelativeRepresentation::layer_profile(int t) const {
    std::vector<double> out;
    for (std::uint32_t f : layer(frame, t)) out.push_back(values[f]);
    return out;
}

IsopignisticFunction decompose(const MassFunction& m) {
    const std::uint32_t count = m.frame().subset_count();
    std::vector<double> values(count, 0.0);
    values[0] = m.empty_mass();
    if (m.empty_mass() >= 1.0 - kMassNegTol) {
        values[0] = 1.0;
        return {m.frame(), std::move(values)};
    }
    auto pd = betp(m);
    auto poss = possibility_from_pignistic(pd);
    const auto norm = m.normalized();
    const std::uint32_t full = m.frame().full_set();
    for (std::uint32_t f = 1; f < count; ++f) {
        const int t = cardinality(f);
        if (t == 1) {
            values[f] = poss[static_cast<std::size_t>(singleton_index(f))];
            continue;
        }
        // sum over supersets A of F of mbar(A) / binom(|A|, |F|)
        double s = 0.0;
        const std::uint32_t rest = full & ~f;
        std::uint32_t g = rest;
        while (true) {
            const std::uint32_t a = f | g;
            if (norm[a] != 0.0) s += norm[a] / static_cast<double>(binom(cardinality(a), t));
            if (g == 0) break;
            g = (g - 1) & rest;
        }
        values[f] = s;
    }
    return {m.frame(), std::move(values)};
}

ZetaFunction zeta(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::domain_error("zeta: frame mismatch");
    double dev = std::abs(m1.empty_mass() - m2.empty_mass());
    if (m1.empty_mass() < 1.0 - kMassNegTol && m2.empty_mass() < 1.0 - kMassNegTol) {
        auto p1 = betp(m1), p2 = betp(m2);
        for (std::size_t i = 0; i < p1.p.size(); ++i)
            dev = std::max(dev, std::abs(p1.p[i] - p2.p[i]));
    }
    if (dev > kIsoDomainTol) {
        std::ostringstream os;
        os << "zeta: inputs are not isopignistic-equivalent (max PPT/e deviation " << dev << ")";
        throw std::domain_error(os.str());
    }
    const int n = m1.n();
    std::vector<double> z(m1.frame().subset_count(), 0.0);
    // top-down recursion from Omega; zeta vanishes on |F| <= 1
    for (int t = n; t >= 2; --t) {
        for (std::uint32_t f : layer(m1.frame(), t)) {
            double flow = 0.0;
            for (std::uint32_t g : parents(m1.frame(), f)) flow += z[g] / cardinality(g);
            z[f] = m1[f] + flow - m2[f];
        }
    }
    return {m1.frame(), std::move(z)};
}

MassFunction apply_zeta(const MassFunction& m, const ZetaFunction& z) {
    if (m.frame() != z.frame) throw std::domain_error("apply_zeta: frame mismatch");
    std::vector<double> out(m.masses().size(), 0.0);
    out[0] = m.empty_mass();
    for (std::uint32_t f = 1; f < out.size(); ++f) {
        double flow = 0.0;
        for (std::uint32_t g : parents(m.frame(), f)) flow += z[g] / cardinality(g);
        out[f] = m[f] - z[f] + flow;
        if (out[f] < -kMassSumTol) {
            std::ostringstream os;
            os << "apply_zeta: negative mass " << out[f] << " on {" << m.frame().subset_name(f)
               << "}";
            throw std::domain_error(os.str());
        }
        out[f] = std::max(out[f], 0.0);
    }
    return {m.frame(), std::move(out)};
}

std::vector<double> probability_from_possibility(const std::vector<double>& poss) {
    const int n = static_cast<int>(poss.size());
    if (n == 0) throw std::domain_error("probability_from_possibility: empty profile");
    double mx = *std::max_element(poss.begin(), poss.end());
    if (std::abs(mx - 1.0) > kMassSumTol)
        throw std::domain_error("probability_from_possibility: profile is not normal (max != 1)");
    std::vector<int> order(poss.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return poss[static_cast<std::size_t>(a)] >
                                                poss[static_cast<std::size_t>(b)]; });
    // order[r-1] is the r-th largest; ties collapse in the differences
    std::vector<double> p(poss.size(), 0.0);
    double prev = poss[static_cast<std::size_t>(order.back())] / n;
    p[static_cast<std::size_t>(order.back())] = prev;
    for (int r = n - 1; r >= 1; --r) {
        const double pi_r = poss[static_cast<std::size_t>(order[static_cast<std::size_t>(r - 1)])];
        const double pi_next = poss[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
        prev += (pi_r - pi_next) / r;
        p[static_cast<std::size_t>(order[static_cast<std::size_t>(r - 1)])] = prev;
    }
    return p;
}

namespace {

// Shared layer walk for relativize/reconstruct. `source` holds the values
// whose parent sums gate each channel (I forward, I-tilde in reverse),
// `transmit` the per-channel layer-t amounts. Returns the minimum active
// ratio, or nullopt when every channel is inactive.
std::optional<double> bottleneck_ratio(const Frame& frame, int t,
                                       const std::vector<double>& source,
                                       const std::vector<double>& transmit) {
    std::optional<double> best;
    for (std::uint32_t f : layer(frame, t)) {
        double par_sum = 0.0;
        for (std::uint32_t g : parents(frame, f)) par_sum += source[g];
        if (par_sum <= 0.0) continue;  // inactive channel
        const double ratio = transmit[f] / par_sum;
        if (!best || ratio < *best) best = ratio;
    }
    return best;
}

std::vector<double> transmit_table(const Frame& frame, int t, const std::vector<double>& p,
                                   const std::vector<double>& iso) {
    std::vector<double> out(frame.subset_count(), 0.0);
    if (t == 1) {
        for (int i = 0; i < frame.size(); ++i)
            out[1u << i] = p[static_cast<std::size_t>(i)];
    } else {
        for (std::uint32_t f : layer(frame, t)) out[f] = iso[f];
    }
    return out;
}

}  // namespace

RelativeRepresentation relativize(const IsopignisticFunction& iso) {
    const Frame& frame = iso.frame;
    const int n = frame.size();
    std::vector<double> rel(frame.subset_count(), 0.0);
    std::vector<double> scales(static_cast<std::size_t>(std::max(n - 1, 0)), 0.0);
    rel[0] = iso[0];
    if (iso[0] >= 1.0 - kMassNegTol) {
        rel[0] = 1.0;
        return {frame, std::move(rel), std::move(scales)};
    }
    std::vector<double> poss(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rel[1u << i] = iso[1u << i];
        poss[static_cast<std::size_t>(i)] = iso[1u << i];
    }
    const auto p = probability_from_possibility(poss);
    for (int t = 1; t <= n - 1; ++t) {
        const auto transmit = transmit_table(frame, t, p, iso.values);
        const auto ratio = bottleneck_ratio(frame, t, iso.values, transmit);
        const double s = (ratio && *ratio > 0.0) ? 1.0 / ((t + 1) * *ratio) : 0.0;
        scales[static_cast<std::size_t>(t - 1)] = s;
        double max_i = 0.0;
        for (std::uint32_t g : layer(frame, t + 1)) max_i = std::max(max_i, iso[g]);
        if (s == 0.0 || max_i == 0.0) continue;  // layer stays zero
        for (std::uint32_t g : layer(frame, t + 1)) rel[g] = s * iso[g] / max_i;
    }
    return {frame, std::move(rel), std::move(scales)};
}

RelativeRepresentation relativize(const MassFunction& m) { return relativize(decompose(m)); }

MassFunction reconstruct(const RelativeRepresentation& rel) {
    const Frame& frame = rel.frame;
    const int n = frame.size();
    const std::uint32_t count = frame.subset_count();
    const double e = rel[0];
    if (e < -kMassNegTol || e > 1.0 + kMassNegTol)
        throw std::domain_error("reconstruct: value(empty) outside [0,1]");
    std::vector<double> masses(count, 0.0);
    if (e >= 1.0 - kMassNegTol) {
        masses[0] = 1.0;
        return {frame, std::move(masses)};
    }
    std::vector<double> poss(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) poss[static_cast<std::size_t>(i)] = rel[1u << i];
    const auto p = probability_from_possibility(poss);  // enforces max = 1

    // Recover the isopignistic function layer by layer.
    std::vector<double> iso(count, 0.0);
    iso[0] = e;
    for (int i = 0; i < n; ++i) iso[1u << i] = poss[static_cast<std::size_t>(i)];
    for (int t = 1; t <= n - 1; ++t) {
        const auto transmit = transmit_table(frame, t, p, iso);
        const auto ratio = bottleneck_ratio(frame, t, rel.values, transmit);
        if (!ratio || *ratio <= 0.0) continue;  // recovered layer stays zero
        const double r = (t + 1) * *ratio;
        double max_rel = 0.0;
        for (std::uint32_t g : layer(frame, t + 1)) max_rel = std::max(max_rel, rel[g]);
        for (std::uint32_t g : layer(frame, t + 1)) iso[g] = r * rel[g] * max_rel;
    }

    // Peel the BEN back into a normalized BPA; the singleton row consumes
    // the recovered pignistic probability, not the possibility profile.
    masses[0] = e;
    const double scale = 1.0 - e;
    for (std::uint32_t f = 1; f < count; ++f) {
        const int t = cardinality(f);
        double base = t == 1 ? p[static_cast<std::size_t>(singleton_index(f))] : iso[f];
        double flow = 0.0;
        for (std::uint32_t g : parents(frame, f)) flow += iso[g] / (t + 1);
        double mbar = base - flow;
        if (mbar < -1e-9) {
            std::ostringstream os;
            os << "reconstruct: negative mass " << mbar << " on {" << frame.subset_name(f) << "}";
            throw std::domain_error(os.str());
        }
        masses[f] = scale * std::max(mbar, 0.0);
    }
    // Telescoping leaves the sum at 1 up to rounding; pin it exactly so
    // chained reconstructions stay inside the validator tolerance.
    double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
    if (sum > 0.0 && std::abs(sum - 1.0) <= 1e-6)
        for (auto& v : masses) v /= sum;
    return {frame, std::move(masses)};
}

}  // namespace pecr
