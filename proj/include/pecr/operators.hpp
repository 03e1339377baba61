#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pecr {

enum class OpFamily {
    Minimum,
    Product,
    Lukasiewicz,
    Maximum,
    ProbabilisticSum,
    BoundedSum,
    Frank,
    HamacherT,
    FrankConorm,
    HamacherConorm,
    ArithmeticMean,
};

enum class OpKind { TNorm, TConorm, Mean };

// A binary aggregator on [0,1]: t-norm, t-conorm, or the arithmetic mean.
// Frank (lambda > 0) and Hamacher (gamma >= 0) are parametric; construction
// routes Frank lambda = 1 to product and lambda = 0 to min/max.
class TriangularOperator {
public:
    static TriangularOperator make(OpFamily family,
                                   std::optional<double> parameter = std::nullopt);
    // Grammar: min|product|lukasiewicz|max|probsum|boundedsum|mean|
    //          frank:<l>|hamacher:<g>|frank_conorm:<l>|hamacher_conorm:<g>
    static TriangularOperator parse(const std::string& spec);

    OpFamily family() const { return family_; }
    OpKind kind() const { return kind_; }
    std::optional<double> parameter() const { return parameter_; }
    bool is_associative() const { return family_ != OpFamily::ArithmeticMean; }
    std::string name() const;

    double eval(double x, double y) const;
    // k-ary application: left fold for t-norms/conorms, exact average for
    // the mean. Throws std::domain_error on an empty list.
    double fold(const std::vector<double>& values) const;

    // De Morgan dual. Throws std::domain_error for the mean.
    TriangularOperator dual() const;

private:
    TriangularOperator(OpFamily family, OpKind kind, std::optional<double> parameter)
        : family_(family), kind_(kind), parameter_(parameter) {}

    OpFamily family_;
    OpKind kind_;
    std::optional<double> parameter_;
};

// Sampled dominance certificate: a.eval <= b.eval + 1e-12 on a 101x101 grid.
bool pointwise_dominates(const TriangularOperator& a, const TriangularOperator& b);

}  // namespace pecr
