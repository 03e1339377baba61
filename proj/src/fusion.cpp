#include "pecr/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pecr {

namespace {

const Frame& common_frame(const std::vector<MassFunction>& sources) {
    if (sources.size() < 2) throw std::invalid_argument("fusion requires at least two sources");
    for (const auto& m : sources)
        if (m.frame() != sources.front().frame())
            throw std::invalid_argument("fusion: sources live on different frames");
    return sources.front().frame();
}

const Frame& common_frame(const std::vector<RelativeRepresentation>& reps) {
    if (reps.size() < 2) throw std::invalid_argument("fusion requires at least two sources");
    for (const auto& r : reps)
        if (r.frame != reps.front().frame)
            throw std::invalid_argument("fusion: sources live on different frames");
    return reps.front().frame;
}

}  // namespace

FusionConfig::FusionConfig(TriangularOperator p, TriangularOperator c)
    : propensity_op(std::move(p)), commitment_op(std::move(c)) {
    if (propensity_op.kind() == OpKind::Mean)
        throw std::invalid_argument("propensity operator must be a t-norm or a t-conorm");
}

std::vector<double> propensity_fuse(const std::vector<RelativeRepresentation>& reps,
                                    const TriangularOperator& op) {
    const Frame& frame = common_frame(reps);
    std::vector<double> fused(static_cast<std::size_t>(frame.size()), 0.0);
    std::vector<double> column(reps.size());
    for (int i = 0; i < frame.size(); ++i) {
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const auto& r = reps[k];
            column[k] = std::clamp((1.0 - r.values[0]) * r.values[1u << i], 0.0, 1.0);
        }
        fused[static_cast<std::size_t>(i)] = op.fold(column);
    }
    return fused;
}

std::vector<double> commitment_fuse(const std::vector<RelativeRepresentation>& reps,
                                    const TriangularOperator& op, int t) {
    const Frame& frame = common_frame(reps);
    if (t < 2 || t > frame.size())
        throw std::invalid_argument("commitment_fuse: layer index out of range");
    std::vector<double> fused;
    std::vector<double> column(reps.size());
    for (std::uint32_t f : layer(frame, t)) {
        for (std::size_t k = 0; k < reps.size(); ++k)
            column[k] = std::clamp(reps[k].values[f], 0.0, 1.0);
        fused.push_back(op.fold(column));
    }
    return fused;
}

std::pair<MassFunction, FusedDiagnostics> pecr(const std::vector<MassFunction>& sources,
                                               const FusionConfig& cfg) {
    const Frame& frame = common_frame(sources);
    const int n = frame.size();
    std::vector<RelativeRepresentation> reps;
    reps.reserve(sources.size());
    for (const auto& m : sources) reps.push_back(relativize(m));

    FusedDiagnostics diag;
    diag.raw_propensity = propensity_fuse(reps, cfg.propensity_op);
    diag.height = *std::max_element(diag.raw_propensity.begin(), diag.raw_propensity.end());
    diag.conflict = 1.0 - diag.height;
    for (int t = 2; t <= n; ++t)
        diag.commitment_layers.push_back(commitment_fuse(reps, cfg.commitment_op, t));

    std::vector<double> rel(frame.subset_count(), 0.0);
    rel[0] = diag.conflict;
    if (diag.height <= 0.0) {
        rel[0] = 1.0;  // fused result is the empty BPA
    } else {
        for (int i = 0; i < n; ++i)
            rel[1u << i] = diag.raw_propensity[static_cast<std::size_t>(i)] / diag.height;
        for (int t = 2; t <= n; ++t) {
            const auto subsets = layer(frame, t);
            const auto& profile = diag.commitment_layers[static_cast<std::size_t>(t - 2)];
            for (std::size_t i = 0; i < subsets.size(); ++i) rel[subsets[i]] = profile[i];
        }
    }
    RelativeRepresentation fused{frame, std::move(rel), {}};
    return {reconstruct(fused), std::move(diag)};
}

MassFunction ccr(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::invalid_argument("ccr: frame mismatch");
    auto q1 = commonality_table(m1);
    const auto q2 = commonality_table(m2);
    for (std::size_t i = 0; i < q1.size(); ++i) q1[i] *= q2[i];
    superset_mobius(q1, m1.n());
    for (auto& v : q1) v = std::max(v, 0.0);
    return {m1.frame(), std::move(q1)};
}

MassFunction dcr(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::invalid_argument("dcr: frame mismatch");
    auto b1 = implicability_table(m1);
    const auto b2 = implicability_table(m2);
    for (std::size_t i = 0; i < b1.size(); ++i) b1[i] *= b2[i];
    subset_mobius(b1, m1.n());
    for (auto& v : b1) v = std::max(v, 0.0);
    return {m1.frame(), std::move(b1)};
}

MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
    auto c = ccr(m1, m2);
    const double conflict = c.empty_mass();
    if (conflict >= 1.0 - kMassSumTol)
        throw std::domain_error("dempster: total conflict, rule undefined");
    std::vector<double> out = c.masses();
    out[0] = 0.0;
    for (auto& v : out) v /= 1.0 - conflict;
    return {m1.frame(), std::move(out)};
}

MassFunction yager(const MassFunction& m1, const MassFunction& m2) {
    auto c = ccr(m1, m2);
    std::vector<double> out = c.masses();
    out.back() += out[0];
    out[0] = 0.0;
    return {m1.frame(), std::move(out)};
}

MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::invalid_argument("dubois_prade: frame mismatch");
    const std::uint32_t count = m1.frame().subset_count();
    std::vector<double> out(count, 0.0);
    for (std::uint32_t a = 0; a < count; ++a) {
        if (m1[a] == 0.0) continue;
        for (std::uint32_t bset = 0; bset < count; ++bset) {
            if (m2[bset] == 0.0) continue;
            const std::uint32_t inter = a & bset;
            out[inter != 0 ? inter : (a | bset)] += m1[a] * m2[bset];
        }
    }
    return {m1.frame(), std::move(out)};
}

MassFunction caucr(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::invalid_argument("caucr: frame mismatch");
    if (m1.is_dogmatic() || m2.is_dogmatic())
        throw std::domain_error(
            "caucr: applies to non-dogmatic sources only (requires m(Omega) > 0)");
    const auto w1 = weight_sigma(m1);
    const auto w2 = weight_sigma(m2);
    const std::uint32_t count = m1.frame().subset_count();
    const std::uint32_t full = m1.frame().full_set();
    // combine the simple BPAs F^{min(s1,s2)} in the commonality domain:
    // q_simple(G) = s + (1 - s)[G subset of F]
    //
    // the empty-set weight scales every nonempty commonality uniformly and can
    // be enormous for near-dogmatic inputs, so it is factored out of the
    // transform and reapplied per mass afterwards to keep the Mobius step
    // well conditioned; the empty-set mass then follows from the unit total
    const double s_empty = std::min(w1.weights[0], w2.weights[0]);
    std::vector<double> qt(count, 1.0);
    for (std::uint32_t f = 1; f < count; ++f) {
        if (f == full) continue;
        const double s = std::min(w1.weights[f], w2.weights[f]);
        for (std::uint32_t g = 0; g < count; ++g)
            qt[g] *= ((g & ~f) == 0) ? 1.0 : s;
    }
    superset_mobius(qt, m1.n());
    double nonempty = 0.0;
    for (std::uint32_t g = 1; g < count; ++g) {
        qt[g] = std::max(qt[g] * s_empty, 0.0);
        nonempty += qt[g];
    }
    qt[0] = std::max(1.0 - nonempty, 0.0);
    return {m1.frame(), std::move(qt)};
}

MassFunction bcr(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) throw std::invalid_argument("bcr: frame mismatch");
    if (m1.is_normalized() || m2.is_normalized())
        throw std::domain_error("bcr: applies to unnormalized sources only (requires m(empty) > 0)");
    const auto w1 = weight_v(m1);
    const auto w2 = weight_v(m2);
    const std::uint32_t count = m1.frame().subset_count();
    const std::uint32_t full = m1.frame().full_set();
    // dual route: b_simple(G) = v + (1 - v)[F subset of G]
    //
    // dual of the caucr conditioning fix: the frame weight scales every
    // proper-subset implicability uniformly, so it is factored out of the
    // Mobius step and reapplied per mass; the frame mass follows from the
    // unit total
    const double v_full = std::min(w1.weights[full], w2.weights[full]);
    std::vector<double> bt(count, 1.0);
    for (std::uint32_t f = 1; f < full; ++f) {
        const double v = std::min(w1.weights[f], w2.weights[f]);
        for (std::uint32_t g = 0; g < count; ++g)
            bt[g] *= ((f & ~g) == 0) ? 1.0 : v;
    }
    subset_mobius(bt, m1.n());
    double proper = 0.0;
    for (std::uint32_t g = 0; g < full; ++g) {
        bt[g] = std::max(bt[g] * v_full, 0.0);
        proper += bt[g];
    }
    bt[full] = std::max(1.0 - proper, 0.0);
    return {m1.frame(), std::move(bt)};
}

bool informative_leq(const MassFunction& a, const MassFunction& b, double tol) {
    if (a.frame() != b.frame()) throw std::invalid_argument("informative_leq: frame mismatch");
    const auto ra = relativize(a);
    const auto rb = relativize(b);
    const int n = a.n();
    for (int i = 0; i < n; ++i) {
        const double da = (1.0 - ra.values[0]) * ra.values[1u << i];
        const double db = (1.0 - rb.values[0]) * rb.values[1u << i];
        if (da > db + tol) return false;
    }
    for (std::uint32_t f = 0; f < a.frame().subset_count(); ++f)
        if (cardinality(f) >= 2 && ra.values[f] > rb.values[f] + tol) return false;
    return true;
}

}  // namespace pecr
