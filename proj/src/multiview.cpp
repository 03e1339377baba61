#include "pecr/multiview.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pecr::multiview {

namespace {

constexpr double kProbFloor = 1e-12;

[[noreturn]] void csv_error(const std::string& path, std::size_t row, std::size_t col,
                            const std::string& what) {
    std::ostringstream os;
    os << path << ": row " << row << ", column " << col << ": " << what;
    throw std::runtime_error(os.str());
}

}  // namespace

DatasetTable load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw std::runtime_error(path + ": missing header row");
    DatasetTable table;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.feature_names.push_back(cell);
        if (table.feature_names.size() < 2)
            throw std::runtime_error(path + ": header needs features plus a label column");
        table.feature_names.pop_back();  // last column is the label
    }
    std::vector<long> raw_labels;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> values;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                values.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                csv_error(path, row, col, "cannot parse numeric value '" + cell + "'");
            }
        }
        if (values.size() != table.feature_names.size() + 1)
            csv_error(path, row, values.size(), "wrong number of columns");
        const double lab = values.back();
        if (lab != std::floor(lab)) csv_error(path, row, values.size(), "label is not an integer");
        raw_labels.push_back(static_cast<long>(lab));
        values.pop_back();
        table.features.push_back(std::move(values));
    }
    if (table.features.empty()) throw std::runtime_error(path + ": no data rows");
    std::vector<long> classes = raw_labels;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.size() < 2) throw std::runtime_error(path + ": need at least two classes");
    for (long c : classes) table.class_names.push_back(std::to_string(c));
    for (long lab : raw_labels)
        table.labels.push_back(static_cast<int>(
            std::lower_bound(classes.begin(), classes.end(), lab) - classes.begin()));
    return table;
}

ViewProtocol protocol_by_name(const std::string& name) {
    if (name == "Wine-C1")
        return {name, PartitionScheme::Contiguous, 3, 1, 13, {7, 6, 6}};
    if (name == "D0-4-R6")
        return {name, PartitionScheme::RoundRobin, 3, 6, 64, {34, 33, 33}};
    if (name == "D0-4-D4")
        return {name, PartitionScheme::Diagonal, 3, 4, 64, {29, 30, 29}};
    if (name == "D5-9-R2")
        return {name, PartitionScheme::RoundRobin, 3, 2, 64, {26, 25, 25}};
    if (name == "BC-R4")
        return {name, PartitionScheme::RoundRobin, 3, 4, 30, {18, 18, 18}};
    throw std::invalid_argument("unknown protocol '" + name + "'");
}

std::vector<std::vector<std::size_t>> build_views(std::size_t feature_count,
                                                  const ViewProtocol& protocol) {
    if (feature_count != protocol.expected_features) {
        std::ostringstream os;
        os << "protocol " << protocol.name << " expects " << protocol.expected_features
           << " features, dataset has " << feature_count;
        throw std::invalid_argument(os.str());
    }
    const int k = protocol.view_count;
    std::vector<std::vector<std::size_t>> base(static_cast<std::size_t>(k));
    switch (protocol.scheme) {
        case PartitionScheme::Contiguous: {
            // near-equal blocks, remainder features go to the front blocks
            std::size_t start = 0;
            for (int v = 0; v < k; ++v) {
                std::size_t len = feature_count / k + (static_cast<std::size_t>(v) <
                                                               feature_count % k
                                                           ? 1
                                                           : 0);
                for (std::size_t i = 0; i < len; ++i) base[v].push_back(start + i);
                start += len;
            }
            break;
        }
        case PartitionScheme::RoundRobin:
            for (std::size_t i = 0; i < feature_count; ++i) base[i % k].push_back(i);
            break;
        case PartitionScheme::Diagonal: {
            // pixel grid: feature r*8+c joins view (r+c) mod k
            if (feature_count != 64)
                throw std::invalid_argument("diagonal partition expects an 8x8 pixel grid");
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t c = 0; c < 8; ++c) base[(r + c) % k].push_back(r * 8 + c);
            break;
        }
    }
    std::vector<std::vector<std::size_t>> views = base;
    for (int v = 0; v < k; ++v)
        for (int w = 0; w < k; ++w) {
            if (w == v) continue;
            for (int i = 0; i < protocol.borrow; ++i)
                views[v].push_back(base[w][static_cast<std::size_t>(i)]);
        }
    for (int v = 0; v < k; ++v) {
        if (views[v].size() != protocol.expected_sizes[static_cast<std::size_t>(v)]) {
            std::ostringstream os;
            os << "protocol " << protocol.name << ": computed view sizes (";
            for (int u = 0; u < k; ++u) os << (u ? "/" : "") << views[u].size();
            os << ") do not match the declared sizes";
            throw std::invalid_argument(os.str());
        }
    }
    return views;
}

GnbModel gnb_fit(const std::vector<std::vector<double>>& features, const std::vector<int>& labels,
                 int class_count) {
    if (features.empty() || features.size() != labels.size())
        throw std::invalid_argument("gnb_fit: bad training data");
    const std::size_t d = features.front().size();
    GnbModel model;
    model.class_log_prior.assign(static_cast<std::size_t>(class_count), 0.0);
    model.mean.assign(static_cast<std::size_t>(class_count), std::vector<double>(d, 0.0));
    model.variance.assign(static_cast<std::size_t>(class_count), std::vector<double>(d, 0.0));
    std::vector<std::size_t> counts(static_cast<std::size_t>(class_count), 0);
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        ++counts[c];
        for (std::size_t j = 0; j < d; ++j) model.mean[c][j] += features[i][j];
    }
    for (int c = 0; c < class_count; ++c) {
        if (counts[static_cast<std::size_t>(c)] == 0)
            throw std::invalid_argument("gnb_fit: class absent from the training split");
        for (auto& v : model.mean[static_cast<std::size_t>(c)])
            v /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
    }
    double max_var = 0.0;
    {
        // overall per-feature variance drives the smoothing floor
        std::vector<double> mu(d, 0.0), ss(d, 0.0);
        for (const auto& row : features)
            for (std::size_t j = 0; j < d; ++j) mu[j] += row[j];
        for (auto& v : mu) v /= static_cast<double>(features.size());
        for (const auto& row : features)
            for (std::size_t j = 0; j < d; ++j) ss[j] += (row[j] - mu[j]) * (row[j] - mu[j]);
        for (std::size_t j = 0; j < d; ++j)
            max_var = std::max(max_var, ss[j] / static_cast<double>(features.size()));
    }
    const double epsilon = std::max(1e-9 * max_var, 1e-12);
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = features[i][j] - model.mean[c][j];
            model.variance[c][j] += diff * diff;
        }
    }
    for (int c = 0; c < class_count; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        for (std::size_t j = 0; j < d; ++j)
            model.variance[cc][j] =
                model.variance[cc][j] / static_cast<double>(counts[cc]) + epsilon;
        model.class_log_prior[cc] = std::log(static_cast<double>(counts[cc]) /
                                             static_cast<double>(features.size()));
    }
    return model;
}

std::vector<double> gnb_predict_proba(const GnbModel& model, const std::vector<double>& sample) {
    const std::size_t classes = model.mean.size();
    std::vector<double> logp(classes);
    for (std::size_t c = 0; c < classes; ++c) {
        double lp = model.class_log_prior[c];
        for (std::size_t j = 0; j < sample.size(); ++j) {
            const double var = model.variance[c][j];
            const double diff = sample[j] - model.mean[c][j];
            lp += -0.5 * (std::log(2.0 * M_PI * var) + diff * diff / var);
        }
        logp[c] = lp;
    }
    const double mx = *std::max_element(logp.begin(), logp.end());
    double sum = 0.0;
    for (auto& v : logp) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (auto& v : logp) v /= sum;
    return logp;
}

MassFunction proba_to_bpa(const Frame& frame, const std::vector<double>& probs) {
    if (static_cast<int>(probs.size()) != frame.size())
        throw std::invalid_argument("proba_to_bpa: size mismatch");
    std::vector<double> masses(frame.subset_count(), 0.0);
    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("proba_to_bpa: probabilities must sum to 1");
    for (int i = 0; i < frame.size(); ++i) masses[1u << i] = probs[static_cast<std::size_t>(i)] / sum;
    return {frame, std::move(masses)};
}

FusionRule FusionRule::parse(const std::string& spec) {
    if (spec == "frank") return {spec, Kind::ParametricFrank, std::nullopt};
    if (spec == "hamacher") return {spec, Kind::ParametricHamacher, std::nullopt};
    if (spec == "ccr") return {spec, Kind::CcrNormalized, std::nullopt};
    if (spec == "caucr") return {spec, Kind::CauCR, std::nullopt};
    if (spec == "majority") return {spec, Kind::Majority, std::nullopt};
    std::string body = spec;
    if (body.rfind("pecr:", 0) == 0) body = body.substr(5);
    auto pos = body.find(':');
    std::string prop = body, comm = body;
    // parametric specs carry their own ':'; a second one splits prop/comm
    if (pos != std::string::npos) {
        const std::string head = body.substr(0, pos);
        if (head == "frank" || head == "hamacher" || head == "frank_conorm" ||
            head == "hamacher_conorm") {
            auto second = body.find(':', pos + 1);
            if (second != std::string::npos) {
                prop = body.substr(0, second);
                comm = body.substr(second + 1);
            }
        } else {
            prop = body.substr(0, pos);
            comm = body.substr(pos + 1);
        }
    }
    FusionConfig cfg(TriangularOperator::parse(prop), TriangularOperator::parse(comm));
    return {spec, Kind::Pecr, cfg};
}

namespace {

struct FoldAssignment {
    std::vector<std::vector<std::size_t>> train;  // per fold
    std::vector<std::vector<std::size_t>> test;
};

// Stratified fold assignment: shuffle within class, deal round-robin.
FoldAssignment stratified_folds(const std::vector<int>& labels, int class_count, int folds,
                                std::mt19937_64& rng) {
    std::vector<std::vector<std::size_t>> per_class(static_cast<std::size_t>(class_count));
    for (std::size_t i = 0; i < labels.size(); ++i)
        per_class[static_cast<std::size_t>(labels[i])].push_back(i);
    for (auto& idx : per_class) {
        if (static_cast<int>(idx.size()) < folds)
            throw std::invalid_argument("stratification impossible: class count below fold count");
        std::shuffle(idx.begin(), idx.end(), rng);
    }
    std::vector<int> fold_of(labels.size(), 0);
    int cursor = 0;
    for (const auto& idx : per_class)
        for (std::size_t i : idx) fold_of[i] = cursor++ % folds;
    FoldAssignment out;
    out.train.assign(static_cast<std::size_t>(folds), {});
    out.test.assign(static_cast<std::size_t>(folds), {});
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (int f = 0; f < folds; ++f)
            (fold_of[i] == f ? out.test : out.train)[static_cast<std::size_t>(f)].push_back(i);
    return out;
}

struct Standardizer {
    std::vector<double> mu, sigma;

    static Standardizer fit(const std::vector<std::vector<double>>& rows) {
        const std::size_t d = rows.front().size();
        Standardizer s;
        s.mu.assign(d, 0.0);
        s.sigma.assign(d, 0.0);
        for (const auto& r : rows)
            for (std::size_t j = 0; j < d; ++j) s.mu[j] += r[j];
        for (auto& v : s.mu) v /= static_cast<double>(rows.size());
        for (const auto& r : rows)
            for (std::size_t j = 0; j < d; ++j) s.sigma[j] += (r[j] - s.mu[j]) * (r[j] - s.mu[j]);
        for (auto& v : s.sigma) v = std::max(std::sqrt(v / static_cast<double>(rows.size())), 1e-12);
        return s;
    }
    std::vector<double> apply(const std::vector<double>& row) const {
        std::vector<double> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mu[j]) / sigma[j];
        return out;
    }
};

std::vector<double> view_slice(const std::vector<double>& row,
                               const std::vector<std::size_t>& view) {
    std::vector<double> out;
    out.reserve(view.size());
    for (std::size_t j : view) out.push_back(row[j]);
    return out;
}

// Per-sample, per-view class probabilities for the given train/test split.
std::vector<std::vector<std::vector<double>>> split_probabilities(
    const DatasetTable& table, const std::vector<std::vector<std::size_t>>& views,
    const std::vector<std::size_t>& train, const std::vector<std::size_t>& test) {
    std::vector<std::vector<std::vector<double>>> probs(
        test.size(), std::vector<std::vector<double>>(views.size()));
    std::vector<std::vector<double>> train_rows;
    train_rows.reserve(train.size());
    std::vector<int> train_labels;
    train_labels.reserve(train.size());
    for (std::size_t v = 0; v < views.size(); ++v) {
        train_rows.clear();
        train_labels.clear();
        for (std::size_t i : train) {
            train_rows.push_back(view_slice(table.features[i], views[v]));
            train_labels.push_back(table.labels[i]);
        }
        const auto scaler = Standardizer::fit(train_rows);
        for (auto& r : train_rows) r = scaler.apply(r);
        const auto model = gnb_fit(train_rows, train_labels, table.class_count());
        for (std::size_t s = 0; s < test.size(); ++s) {
            auto p = gnb_predict_proba(
                model, scaler.apply(view_slice(table.features[test[s]], views[v])));
            // guard against underflow before operators see the values
            double sum = 0.0;
            for (auto& x : p) {
                x = std::clamp(x, kProbFloor, 1.0);
                sum += x;
            }
            for (auto& x : p) x /= sum;
            probs[s][v] = std::move(p);
        }
    }
    return probs;
}

int argmax_betp(const MassFunction& m) {
    if (m.empty_mass() >= 1.0 - kMassNegTol) return 0;  // degenerate, should not occur
    const auto pd = betp(m);
    return static_cast<int>(std::max_element(pd.p.begin(), pd.p.end()) - pd.p.begin());
}

MassFunction vacuous_discount(const MassFunction& m, double delta) {
    std::vector<double> out = m.masses();
    for (auto& v : out) v *= 1.0 - delta;
    out.back() += delta;
    return {m.frame(), std::move(out)};
}

int decide(const FusionRule& rule, const std::vector<MassFunction>& bpas,
           const std::vector<std::vector<double>>& view_probs, const CvOptions& options,
           std::optional<double> parameter) {
    switch (rule.kind) {
        case FusionRule::Kind::Pecr:
            return argmax_betp(pecr(bpas, *rule.config).first);
        case FusionRule::Kind::ParametricFrank: {
            FusionConfig cfg(TriangularOperator::make(OpFamily::Frank, *parameter),
                             TriangularOperator::make(OpFamily::Frank, *parameter));
            return argmax_betp(pecr(bpas, cfg).first);
        }
        case FusionRule::Kind::ParametricHamacher: {
            FusionConfig cfg(TriangularOperator::make(OpFamily::HamacherT, *parameter),
                             TriangularOperator::make(OpFamily::HamacherT, *parameter));
            return argmax_betp(pecr(bpas, cfg).first);
        }
        case FusionRule::Kind::CcrNormalized: {
            // unnormalized conjunctive chain: normalizing by 1 - m(empty) cannot
            // change the argmax, and skipping it keeps near-total-conflict
            // samples decidable (surviving singleton masses can be ~1e-36)
            MassFunction acc = ccr(bpas[0], bpas[1]);
            for (std::size_t i = 2; i < bpas.size(); ++i) acc = ccr(acc, bpas[i]);
            const auto& masses = acc.masses();
            int best = 0;
            for (int c = 1; c < acc.n(); ++c)
                if (masses[1u << c] > masses[1u << best]) best = c;
            return best;
        }
        case FusionRule::Kind::CauCR: {
            // the cautious rule is undefined on the dogmatic Bayesian view
            // posteriors, so each view is vacuously discounted first
            auto source = [&](std::size_t v) {
                return vacuous_discount(bpas[v], options.caucr_discount);
            };
            MassFunction acc = caucr(source(0), source(1));
            for (std::size_t i = 2; i < view_probs.size(); ++i) {
                // re-discount only if the frame mass underflowed; doing it
                // unconditionally would perturb the chained weight minimum
                if (acc.is_dogmatic()) acc = vacuous_discount(acc, options.caucr_discount);
                acc = caucr(acc, source(i));
            }
            // conflicting views collapse the cautious combination onto the
            // empty set; the leftover masses then sit at the noise floor of
            // the weight computation (Mobius roundoff amplified by the
            // empty-set weight), so the pignistic argmax degenerates
            if (acc.empty_mass() >= 1.0 - options.caucr_collapse_floor) return 0;
            return argmax_betp(acc);
        }
        case FusionRule::Kind::Majority: {
            const int classes = static_cast<int>(view_probs.front().size());
            std::vector<int> votes(static_cast<std::size_t>(classes), 0);
            std::vector<double> support(static_cast<std::size_t>(classes), 0.0);
            for (const auto& p : view_probs) {
                const auto best = static_cast<std::size_t>(
                    std::max_element(p.begin(), p.end()) - p.begin());
                ++votes[best];
                for (std::size_t c = 0; c < p.size(); ++c) support[c] += p[c];
            }
            int best = 0;
            for (int c = 1; c < classes; ++c) {
                const auto cc = static_cast<std::size_t>(c), bb = static_cast<std::size_t>(best);
                if (votes[cc] > votes[bb] || (votes[cc] == votes[bb] && support[cc] > support[bb]))
                    best = c;
            }
            return best;
        }
    }
    throw std::logic_error("unreachable");
}

bool rule_is_parametric(const FusionRule& rule) {
    return rule.kind == FusionRule::Kind::ParametricFrank ||
           rule.kind == FusionRule::Kind::ParametricHamacher;
}

// Inner grid search: stratified CV on the training split, highest mean
// accuracy wins (first grid entry on ties).
double select_parameter(const DatasetTable& table, const std::vector<std::vector<std::size_t>>& views,
                        const std::vector<std::size_t>& train, const FusionRule& rule,
                        const CvOptions& options, std::uint64_t seed) {
    const auto& grid = rule.kind == FusionRule::Kind::ParametricFrank ? options.frank_grid
                                                                      : options.hamacher_grid;
    std::vector<int> train_labels;
    for (std::size_t i : train) train_labels.push_back(table.labels[i]);
    std::mt19937_64 rng(seed);
    const auto inner = stratified_folds(train_labels, table.class_count(), options.inner_folds, rng);
    Frame frame(table.class_names);
    std::vector<double> correct(grid.size(), 0.0);
    std::size_t total = 0;
    for (int f = 0; f < options.inner_folds; ++f) {
        std::vector<std::size_t> inner_train, inner_test;
        for (std::size_t i : inner.train[static_cast<std::size_t>(f)]) inner_train.push_back(train[i]);
        for (std::size_t i : inner.test[static_cast<std::size_t>(f)]) inner_test.push_back(train[i]);
        const auto probs = split_probabilities(table, views, inner_train, inner_test);
        for (std::size_t s = 0; s < inner_test.size(); ++s) {
            std::vector<MassFunction> bpas;
            for (const auto& p : probs[s]) bpas.push_back(proba_to_bpa(frame, p));
            for (std::size_t g = 0; g < grid.size(); ++g)
                if (decide(rule, bpas, probs[s], options, grid[g]) ==
                    table.labels[inner_test[s]])
                    correct[g] += 1.0;
        }
        total += inner_test.size();
    }
    std::size_t best = 0;
    for (std::size_t g = 1; g < grid.size(); ++g)
        if (correct[g] > correct[best]) best = g;
    (void)total;
    return grid[best];
}

}  // namespace

std::vector<CvReport> run_cv(const DatasetTable& table, const ViewProtocol& protocol,
                             const std::vector<FusionRule>& rules, const CvOptions& options) {
    const auto views = build_views(table.feature_count(), protocol);
    const Frame frame(table.class_names);
    const int work_items = options.folds * options.repeats;

    std::vector<CvReport> reports(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
        reports[r].rule = rules[r].name;
        reports[r].fold_accuracies.assign(static_cast<std::size_t>(work_items), 0.0);
        if (rule_is_parametric(rules[r]))
            reports[r].chosen_parameters.assign(static_cast<std::size_t>(work_items), 0.0);
    }

    // fold assignments are drawn up front so parallel workers stay deterministic
    std::vector<FoldAssignment> assignments;
    for (int rep = 0; rep < options.repeats; ++rep) {
        std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(rep) * 0x9e3779b97f4a7c15ULL);
        assignments.push_back(
            stratified_folds(table.labels, table.class_count(), options.folds, rng));
    }

    const auto t0 = std::chrono::steady_clock::now();
    // exceptions cannot cross an OpenMP region boundary; capture and rethrow after
    std::exception_ptr worker_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (options.parallel)
#endif
    for (int item = 0; item < work_items; ++item) {
        try {
        const int rep = item / options.folds;
        const int fold = item % options.folds;
        const auto& train = assignments[static_cast<std::size_t>(rep)]
                                .train[static_cast<std::size_t>(fold)];
        const auto& test = assignments[static_cast<std::size_t>(rep)]
                               .test[static_cast<std::size_t>(fold)];
        const auto probs = split_probabilities(table, views, train, test);

        std::vector<std::optional<double>> params(rules.size());
        for (std::size_t r = 0; r < rules.size(); ++r)
            if (rule_is_parametric(rules[r])) {
                params[r] = select_parameter(table, views, train, rules[r], options,
                                             options.seed ^ (static_cast<std::uint64_t>(item) + 1));
                reports[r].chosen_parameters[static_cast<std::size_t>(item)] = *params[r];
            }

        std::vector<std::size_t> correct(rules.size(), 0);
        for (std::size_t s = 0; s < test.size(); ++s) {
            std::vector<MassFunction> bpas;
            for (const auto& p : probs[s]) bpas.push_back(proba_to_bpa(frame, p));
            for (std::size_t r = 0; r < rules.size(); ++r)
                if (decide(rules[r], bpas, probs[s], options, params[r]) ==
                    table.labels[test[s]])
                    ++correct[r];
        }
        for (std::size_t r = 0; r < rules.size(); ++r)
            reports[r].fold_accuracies[static_cast<std::size_t>(item)] =
                static_cast<double>(correct[r]) / static_cast<double>(test.size());
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pecr_cv_error)
#endif
            if (!worker_error) worker_error = std::current_exception();
        }
    }
    if (worker_error) std::rethrow_exception(worker_error);
    const auto t1 = std::chrono::steady_clock::now();
    const double wall = std::chrono::duration<double>(t1 - t0).count();

    for (auto& rep : reports) {
        const auto& acc = rep.fold_accuracies;
        rep.mean = std::accumulate(acc.begin(), acc.end(), 0.0) / static_cast<double>(acc.size());
        double ss = 0.0;
        for (double a : acc) ss += (a - rep.mean) * (a - rep.mean);
        rep.stddev = std::sqrt(ss / static_cast<double>(acc.size()));
        rep.wall_seconds = wall;
    }
    return reports;
}

}  // namespace pecr::multiview
