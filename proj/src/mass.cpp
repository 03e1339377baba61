#include "pecr/mass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pecr {

namespace {

std::string format_violation(const Frame& frame, std::uint32_t f, double v, const char* what) {
    std::ostringstream os;
    os << "m({" << frame.subset_name(f) << "}) = " << v << " " << what;
    return os.str();
}

}  // namespace

ValidationReport validate(const Frame& frame, const std::vector<double>& masses) {
    ValidationReport rep;
    if (masses.size() != frame.subset_count()) {
        rep.ok = false;
        rep.violations.push_back("mass count does not match 2^n");
        return rep;
    }
    double sum = 0.0;
    for (std::uint32_t f = 0; f < masses.size(); ++f) {
        if (masses[f] < -kMassNegTol) {
            rep.ok = false;
            rep.violations.push_back(format_violation(frame, f, masses[f], "is negative"));
        }
        sum += masses[f];
    }
    if (std::abs(sum - 1.0) > kMassSumTol) {
        rep.ok = false;
        std::ostringstream os;
        os << "masses sum to " << sum << ", expected 1";
        rep.violations.push_back(os.str());
    }
    return rep;
}

MassFunction::MassFunction(Frame frame, std::vector<double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
    auto rep = validate(frame_, masses_);
    if (!rep.ok) {
        std::string msg = "invalid BPA:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    for (auto& v : masses_) v = std::max(v, 0.0);  // clamp -1e-12..0 noise
}

bool MassFunction::is_vacuous(double tol) const { return masses_.back() >= 1.0 - tol; }

bool MassFunction::is_bayesian(double tol) const {
    for (std::uint32_t f = 0; f < masses_.size(); ++f)
        if (cardinality(f) != 1 && masses_[f] > tol) return false;
    return true;
}

std::vector<double> MassFunction::normalized() const {
    double e = masses_[0];
    if (e >= 1.0 - kMassNegTol)
        throw std::domain_error("normalized(): m(empty) = 1, no normalized BPA exists");
    std::vector<double> out(masses_.size(), 0.0);
    for (std::uint32_t f = 1; f < masses_.size(); ++f) out[f] = masses_[f] / (1.0 - e);
    return out;
}

double bel(const MassFunction& m, std::uint32_t f) {
    double s = 0.0;
    // iterate non-empty subsets of f
    for (std::uint32_t g = f; g != 0; g = (g - 1) & f) s += m[g];
    return s;
}

double b(const MassFunction& m, std::uint32_t f) { return bel(m, f) + m.empty_mass(); }

double pl(const MassFunction& m, std::uint32_t f) {
    double s = 0.0;
    for (std::uint32_t g = 0; g < m.masses().size(); ++g)
        if ((g & f) != 0) s += m[g];
    return s;
}

double q(const MassFunction& m, std::uint32_t f) {
    double s = 0.0;
    const std::uint32_t full = m.frame().full_set();
    std::uint32_t rest = full & ~f;
    // supersets of f are f | (subset of rest)
    std::uint32_t g = rest;
    while (true) {
        s += m[f | g];
        if (g == 0) break;
        g = (g - 1) & rest;
    }
    return s;
}

std::vector<double> commonality_table(const MassFunction& m) {
    std::vector<double> v = m.masses();
    superset_sum(v, m.n());
    return v;
}

std::vector<double> implicability_table(const MassFunction& m) {
    std::vector<double> v = m.masses();
    subset_sum(v, m.n());
    return v;
}

PignisticDistribution betp(const MassFunction& m) {
    const double e = m.empty_mass();
    if (e >= 1.0 - kMassNegTol)
        throw std::domain_error("betp: m(empty) = 1, the empty BPA has no normalized PPT");
    std::vector<double> p(static_cast<std::size_t>(m.n()), 0.0);
    for (std::uint32_t f = 1; f < m.masses().size(); ++f) {
        if (m[f] == 0.0) continue;
        const double share = m[f] / (cardinality(f) * (1.0 - e));
        for (int i = 0; i < m.n(); ++i)
            if (f & (1u << i)) p[static_cast<std::size_t>(i)] += share;
    }
    return {m.frame(), std::move(p), e};
}

std::vector<double> betp_unnormalized(const MassFunction& m) {
    std::vector<double> p(static_cast<std::size_t>(m.n()) + 1, 0.0);
    p[0] = m.empty_mass();
    for (std::uint32_t f = 1; f < m.masses().size(); ++f) {
        if (m[f] == 0.0) continue;
        const double share = m[f] / cardinality(f);
        for (int i = 0; i < m.n(); ++i)
            if (f & (1u << i)) p[static_cast<std::size_t>(i) + 1] += share;
    }
    return p;
}

std::vector<double> possibility_from_pignistic(const PignisticDistribution& pd) {
    const auto& p = pd.p;
    std::vector<double> poss(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) poss[i] += std::min(p[i], p[j]);
        // the argmax row sums to exactly 1 analytically; keep it there
        poss[i] = std::clamp(poss[i], 0.0, 1.0);
    }
    return poss;
}

namespace {

WeightFunction weights_from_log(const MassFunction& m, WeightKind kind) {
    // sigma(F) = prod_{G >= F} q(G)^{(-1)^{|G|-|F|-1}}  (F != Omega)
    // v(F)     = prod_{G <= F} b(G)^{(-1)^~}            (F != empty)
    // computed as a Moebius inversion of log q (resp. log b).
    const int n = m.n();
    std::vector<double> table =
        kind == WeightKind::ConjunctiveSigma ? commonality_table(m) : implicability_table(m);
    std::vector<double> logs(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] <= 0.0)
            throw std::domain_error("canonical decomposition: zero commonality/implicability");
        logs[i] = std::log(table[i]);
    }
    if (kind == WeightKind::ConjunctiveSigma)
        superset_mobius(logs, n);
    else
        subset_mobius(logs, n);
    std::vector<double> w(table.size(), 1.0);
    const std::uint32_t skip = kind == WeightKind::ConjunctiveSigma ? m.frame().full_set() : 0u;
    for (std::uint32_t f = 0; f < w.size(); ++f) {
        if (f == skip) continue;
        w[f] = std::exp(-logs[f]);  // Moebius gives the |G|-|F| sign; weights flip it
    }
    return {m.frame(), kind, std::move(w)};
}

}  // namespace

WeightFunction weight_sigma(const MassFunction& m) {
    if (m.is_dogmatic())
        throw std::domain_error(
            "weight_sigma: dogmatic BPA (m(Omega) = 0) has no conjunctive decomposition");
    return weights_from_log(m, WeightKind::ConjunctiveSigma);
}

WeightFunction weight_v(const MassFunction& m) {
    if (m.empty_mass() <= kMassSumTol)
        throw std::domain_error(
            "weight_v: normalized BPA (m(empty) = 0) has no disjunctive decomposition");
    return weights_from_log(m, WeightKind::DisjunctiveV);
}

double ignorance(const MassFunction& m) {
    double s = 0.0;
    for (std::uint32_t f = 1; f < m.masses().size(); ++f) s += m[f] * cardinality(f);
    return s;
}

double pignistic_entropy(const MassFunction& m) {
    auto pd = betp(m);
    double h = 0.0;
    for (double v : pd.p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

}  // namespace pecr
