#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pecr/powerset.hpp"

namespace pecr {

constexpr double kMassSumTol = 1e-9;
constexpr double kMassNegTol = 1e-12;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// A basic probability assignment: one mass per subset of the frame.
// m(empty) > 0 is allowed and read as conflict / non-normalizedness.
class MassFunction {
public:
    MassFunction(Frame frame, std::vector<double> masses);

    const Frame& frame() const { return frame_; }
    int n() const { return frame_.size(); }
    const std::vector<double>& masses() const { return masses_; }
    double operator[](std::uint32_t f) const { return masses_[f]; }

    double empty_mass() const { return masses_[0]; }
    bool is_vacuous(double tol = kMassSumTol) const;
    bool is_bayesian(double tol = kMassSumTol) const;
    bool is_dogmatic(double tol = kMassSumTol) const { return masses_.back() <= tol; }
    bool is_normalized(double tol = kMassSumTol) const { return masses_[0] <= tol; }

    // Normalized mass m(F)/(1 - m(empty)) for F != empty; requires m(empty) < 1.
    std::vector<double> normalized() const;

private:
    Frame frame_;
    std::vector<double> masses_;
};

ValidationReport validate(const Frame& frame, const std::vector<double>& masses);

double bel(const MassFunction& m, std::uint32_t f);
double pl(const MassFunction& m, std::uint32_t f);
double q(const MassFunction& m, std::uint32_t f);   // commonality
double b(const MassFunction& m, std::uint32_t f);   // implicability, Bel + m(empty)

// Full commonality / implicability tables via the fast transforms.
std::vector<double> commonality_table(const MassFunction& m);
std::vector<double> implicability_table(const MassFunction& m);

struct PignisticDistribution {
    Frame frame;
    std::vector<double> p;  // one entry per frame element, sums to 1
    double e = 0.0;         // carried-over empty-set mass
};

// Normalized pignistic probability transformation. Requires m(empty) < 1.
PignisticDistribution betp(const MassFunction& m);
// Unnormalized variant: BetP(omega) = sum m(F)/|F|, plus BetP(empty) = m(empty).
std::vector<double> betp_unnormalized(const MassFunction& m);

// Consonant possibility profile of a probability distribution:
// Poss(w_i) = sum_j min(p_i, p_j). Order-isomorphic to p; the argmax gets 1.
std::vector<double> possibility_from_pignistic(const PignisticDistribution& p);

enum class WeightKind { ConjunctiveSigma, DisjunctiveV };

// Canonical-decomposition weights. sigma weights live on F != Omega,
// v weights on F != empty; both are strictly positive and may exceed 1.
struct WeightFunction {
    Frame frame;
    WeightKind kind;
    std::vector<double> weights;  // indexed by subset; unused slot holds 1
};

WeightFunction weight_sigma(const MassFunction& m);  // requires m(Omega) > 0
WeightFunction weight_v(const MassFunction& m);      // requires m(empty) > 0

// Ign(m) = sum_{F != empty} m(F) |F|.
double ignorance(const MassFunction& m);
// Shannon entropy (bits) of BetP^N. Requires m(empty) < 1.
double pignistic_entropy(const MassFunction& m);

}  // namespace pecr
