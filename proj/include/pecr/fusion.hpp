#pragma once

#include <vector>

#include "pecr/isopignistic.hpp"
#include "pecr/mass.hpp"
#include "pecr/operators.hpp"

namespace pecr {

// One PECR instance: the operator pair (propensity, commitment).
// The propensity operator must be a t-norm or a t-conorm; the commitment
// operator may additionally be the arithmetic mean (which costs
// associativity, see is_associative()).
struct FusionConfig {
    TriangularOperator propensity_op;
    TriangularOperator commitment_op;

    FusionConfig(TriangularOperator p, TriangularOperator c);
    bool is_associative() const {
        return propensity_op.is_associative() && commitment_op.is_associative();
    }
};

struct FusedDiagnostics {
    std::vector<double> raw_propensity;  // pre-normalization singleton profile
    double height = 0.0;                 // max of raw_propensity
    double conflict = 0.0;               // 1 - height = fused m(empty)
    // fused commitment profile per layer t = 2..n (index t-2), ascending bits
    std::vector<std::vector<double>> commitment_layers;
};

// Singleton-layer fusion with (1 - e) discounting applied per source.
std::vector<double> propensity_fuse(const std::vector<RelativeRepresentation>& reps,
                                    const TriangularOperator& op);
// Layer-t pointwise commitment fusion (no discounting), 2 <= t <= n.
std::vector<double> commitment_fuse(const std::vector<RelativeRepresentation>& reps,
                                    const TriangularOperator& op, int t);

// The possibilistic evidence combination rule over >= 2 sources.
std::pair<MassFunction, FusedDiagnostics> pecr(const std::vector<MassFunction>& sources,
                                               const FusionConfig& cfg);

// Classical baselines.
MassFunction ccr(const MassFunction& m1, const MassFunction& m2);  // intersection convolution
MassFunction dcr(const MassFunction& m1, const MassFunction& m2);  // union convolution
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);
MassFunction yager(const MassFunction& m1, const MassFunction& m2);
MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2);
MassFunction caucr(const MassFunction& m1, const MassFunction& m2);  // min on sigma weights
MassFunction bcr(const MassFunction& m1, const MassFunction& m2);    // min on v weights

// Layer-wise possibilistic ordering (discounted singleton profile plus
// pointwise commitment layers).
bool informative_leq(const MassFunction& a, const MassFunction& b, double tol = 1e-10);

}  // namespace pecr
