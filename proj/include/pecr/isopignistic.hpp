#pragma once

#include <cstdint>
#include <vector>

#include "pecr/mass.hpp"
#include "pecr/powerset.hpp"

namespace pecr {

// Dense per-subset decomposition of a BPA into normalizedness (empty set),
// propensity (singleton possibilities) and commitment (layers >= 2).
struct IsopignisticFunction {
    Frame frame;
    std::vector<double> values;

    double operator[](std::uint32_t f) const { return values[f]; }
};

// Layer-wise [0,1] profile obtained by bottleneck-rescaling the
// isopignistic function. This is the fusion-space object.
struct RelativeRepresentation {
    Frame frame;
    std::vector<double> values;
    // Forward scaling coefficient per layer t = 1..n-1 (index t-1).
    std::vector<double> layer_scales;

    double operator[](std::uint32_t f) const { return values[f]; }
    // Restriction to cardinality layer t, ascending bitmask order.
    std::vector<double> layer_profile(int t) const;
};

// Signed flows on the belief evolution network; zero on |F| <= 1.
struct ZetaFunction {
    Frame frame;
    std::vector<double> values;

    double operator[](std::uint32_t f) const { return values[f]; }
};

// Isopignistic canonical decomposition. For the empty BPA returns the
// degenerate function with value(empty) = 1 and zeros elsewhere.
IsopignisticFunction decompose(const MassFunction& m);

// Trans-isopignistic function moving m1 to m2 inside one isopignistic
// domain. Throws std::domain_error when the two BPAs do not share the
// empty-set mass and normalized pignistic probability (tolerance 1e-8).
ZetaFunction zeta(const MassFunction& m1, const MassFunction& m2);

// Forward transformation m2(F) = m(F) - zeta(F) + sum_Par zeta(G)/|G|.
// Throws std::domain_error when a resulting mass is negative.
MassFunction apply_zeta(const MassFunction& m, const ZetaFunction& z);

// Bottleneck rescaling of the isopignistic function into [0,1] layers.
RelativeRepresentation relativize(const MassFunction& m);
RelativeRepresentation relativize(const IsopignisticFunction& iso);

// Recover the pignistic probability from a normal possibility profile
// (max = 1 required when used on its own; callers with e = 1 skip it).
std::vector<double> probability_from_possibility(const std::vector<double>& poss);

// Reconstruct a valid BPA from a relative representation satisfying
// value(empty) in [0,1] and, when value(empty) < 1, max singleton = 1.
MassFunction reconstruct(const RelativeRepresentation& rel);

}  // namespace pecr
