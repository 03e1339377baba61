#include "pecr/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pecr {

namespace {

double frank_tnorm(double lambda, double x, double y) {
    // T(x,y) = log_l(1 + (l^x - 1)(l^y - 1)/(l - 1)), l > 0, l != 1
    const double ll = std::log(lambda);
    const double a = std::expm1(x * ll);
    const double b = std::expm1(y * ll);
    const double d = std::expm1(ll);
    double v = std::log1p(a * b / d) / ll;
    return std::clamp(v, 0.0, 1.0);
}

double hamacher_tnorm(double gamma, double x, double y) {
    const double denom = gamma + (1.0 - gamma) * (x + y - x * y);
    if (denom == 0.0) return 0.0;  // gamma = x = y = 0
    return std::clamp(x * y / denom, 0.0, 1.0);
}

void check_unit(double v, const char* who) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << who << ": argument " << v << " outside [0,1]";
        throw std::domain_error(os.str());
    }
}

}  // namespace

TriangularOperator TriangularOperator::make(OpFamily family, std::optional<double> parameter) {
    const bool parametric = family == OpFamily::Frank || family == OpFamily::FrankConorm ||
                            family == OpFamily::HamacherT || family == OpFamily::HamacherConorm;
    if (parametric != parameter.has_value())
        throw std::invalid_argument("operator parameter must be present iff the family is parametric");
    if (family == OpFamily::Frank || family == OpFamily::FrankConorm) {
        const double l = *parameter;
        if (l < 0.0) throw std::invalid_argument("Frank lambda must be >= 0");
        const bool conorm = family == OpFamily::FrankConorm;
        // singular parameters are normalized away at construction
        if (l == 1.0)
            return make(conorm ? OpFamily::ProbabilisticSum : OpFamily::Product);
        if (l == 0.0) return make(conorm ? OpFamily::Maximum : OpFamily::Minimum);
    }
    if (family == OpFamily::HamacherT || family == OpFamily::HamacherConorm) {
        if (*parameter < 0.0) throw std::invalid_argument("Hamacher gamma must be >= 0");
    }
    OpKind kind;
    switch (family) {
        case OpFamily::Minimum:
        case OpFamily::Product:
        case OpFamily::Lukasiewicz:
        case OpFamily::Frank:
        case OpFamily::HamacherT:
            kind = OpKind::TNorm;
            break;
        case OpFamily::ArithmeticMean:
            kind = OpKind::Mean;
            break;
        default:
            kind = OpKind::TConorm;
            break;
    }
    return TriangularOperator(family, kind, parameter);
}

TriangularOperator TriangularOperator::parse(const std::string& spec) {
    std::string name = spec;
    std::optional<double> param;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        try {
            param = std::stod(spec.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse operator parameter in '" + spec + "'");
        }
    }
    static const std::pair<const char*, OpFamily> table[] = {
        {"min", OpFamily::Minimum},
        {"product", OpFamily::Product},
        {"lukasiewicz", OpFamily::Lukasiewicz},
        {"max", OpFamily::Maximum},
        {"probsum", OpFamily::ProbabilisticSum},
        {"boundedsum", OpFamily::BoundedSum},
        {"mean", OpFamily::ArithmeticMean},
        {"frank", OpFamily::Frank},
        {"hamacher", OpFamily::HamacherT},
        {"frank_conorm", OpFamily::FrankConorm},
        {"hamacher_conorm", OpFamily::HamacherConorm},
    };
    for (const auto& [key, fam] : table)
        if (name == key) return make(fam, param);
    throw std::invalid_argument("unknown operator '" + spec + "'");
}

std::string TriangularOperator::name() const {
    std::ostringstream os;
    switch (family_) {
        case OpFamily::Minimum: os << "min"; break;
        case OpFamily::Product: os << "product"; break;
        case OpFamily::Lukasiewicz: os << "lukasiewicz"; break;
        case OpFamily::Maximum: os << "max"; break;
        case OpFamily::ProbabilisticSum: os << "probsum"; break;
        case OpFamily::BoundedSum: os << "boundedsum"; break;
        case OpFamily::ArithmeticMean: os << "mean"; break;
        case OpFamily::Frank: os << "frank"; break;
        case OpFamily::HamacherT: os << "hamacher"; break;
        case OpFamily::FrankConorm: os << "frank_conorm"; break;
        case OpFamily::HamacherConorm: os << "hamacher_conorm"; break;
    }
    if (parameter_) os << ":" << *parameter_;
    return os.str();
}

double TriangularOperator::eval(double x, double y) const {
    check_unit(x, "eval");
    check_unit(y, "eval");
    switch (family_) {
        case OpFamily::Minimum: return std::min(x, y);
        case OpFamily::Product: return x * y;
        case OpFamily::Lukasiewicz: return std::max(0.0, x + y - 1.0);
        case OpFamily::Maximum: return std::max(x, y);
        case OpFamily::ProbabilisticSum: return x + y - x * y;
        case OpFamily::BoundedSum: return std::min(1.0, x + y);
        case OpFamily::ArithmeticMean: return 0.5 * (x + y);
        case OpFamily::Frank: return frank_tnorm(*parameter_, x, y);
        case OpFamily::FrankConorm: return 1.0 - frank_tnorm(*parameter_, 1.0 - x, 1.0 - y);
        case OpFamily::HamacherT: return hamacher_tnorm(*parameter_, x, y);
        case OpFamily::HamacherConorm:
            return 1.0 - hamacher_tnorm(*parameter_, 1.0 - x, 1.0 - y);
    }
    throw std::logic_error("unreachable");
}

double TriangularOperator::fold(const std::vector<double>& values) const {
    if (values.empty()) throw std::domain_error("fold: empty value list");
    if (family_ == OpFamily::ArithmeticMean) {
        for (double v : values) check_unit(v, "fold");
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    }
    double acc = values.front();
    check_unit(acc, "fold");
    for (std::size_t i = 1; i < values.size(); ++i) acc = eval(acc, values[i]);
    return acc;
}

TriangularOperator TriangularOperator::dual() const {
    switch (family_) {
        case OpFamily::Minimum: return make(OpFamily::Maximum);
        case OpFamily::Maximum: return make(OpFamily::Minimum);
        case OpFamily::Product: return make(OpFamily::ProbabilisticSum);
        case OpFamily::ProbabilisticSum: return make(OpFamily::Product);
        case OpFamily::Lukasiewicz: return make(OpFamily::BoundedSum);
        case OpFamily::BoundedSum: return make(OpFamily::Lukasiewicz);
        case OpFamily::Frank: return make(OpFamily::FrankConorm, parameter_);
        case OpFamily::FrankConorm: return make(OpFamily::Frank, parameter_);
        case OpFamily::HamacherT: return make(OpFamily::HamacherConorm, parameter_);
        case OpFamily::HamacherConorm: return make(OpFamily::HamacherT, parameter_);
        case OpFamily::ArithmeticMean:
            throw std::domain_error("the arithmetic mean has no De Morgan dual");
    }
    throw std::logic_error("unreachable");
}

bool pointwise_dominates(const TriangularOperator& a, const TriangularOperator& b) {
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double x = i / 100.0, y = j / 100.0;
            if (a.eval(x, y) > b.eval(x, y) + 1e-12) return false;
        }
    }
    return true;
}

}  // namespace pecr
