#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pecr/fusion.hpp"
#include "pecr/mass.hpp"

namespace pecr::multiview {

struct DatasetTable {
    std::vector<std::vector<double>> features;  // samples x features
    std::vector<int> labels;                    // class index into class_names
    std::vector<std::string> feature_names;
    std::vector<std::string> class_names;  // sorted original label values

    std::size_t sample_count() const { return features.size(); }
    std::size_t feature_count() const { return feature_names.size(); }
    int class_count() const { return static_cast<int>(class_names.size()); }
};

// CSV with a header row, numeric feature columns and an integer label in
// the last column. Throws std::runtime_error with row/column location.
DatasetTable load_csv(const std::string& path);

enum class PartitionScheme { Contiguous, RoundRobin, Diagonal };

struct ViewProtocol {
    std::string name;
    PartitionScheme scheme;
    int view_count = 3;
    int borrow = 0;                  // features borrowed from each other view
    std::size_t expected_features;   // dataset feature count this protocol expects
    std::vector<std::size_t> expected_sizes;
};

// The five protocols used by the experiments: Wine-C1, D0-4-R6, D0-4-D4,
// D5-9-R2, BC-R4. Throws std::invalid_argument for unknown names.
ViewProtocol protocol_by_name(const std::string& name);

// Per-view feature index lists: base partition by scheme, then each view
// appends the first `borrow` indices of every other view's base block.
// Throws std::invalid_argument when the sizes disagree with the protocol.
std::vector<std::vector<std::size_t>> build_views(std::size_t feature_count,
                                                  const ViewProtocol& protocol);

struct GnbModel {
    std::vector<double> class_log_prior;
    // [class][feature]
    std::vector<std::vector<double>> mean;
    std::vector<std::vector<double>> variance;
};

GnbModel gnb_fit(const std::vector<std::vector<double>>& features,
                 const std::vector<int>& labels, int class_count);
std::vector<double> gnb_predict_proba(const GnbModel& model, const std::vector<double>& sample);

// probs summing to 1 -> Bayesian BPA on the class frame.
MassFunction proba_to_bpa(const Frame& frame, const std::vector<double>& probs);

struct FusionRule {
    enum class Kind { Pecr, ParametricFrank, ParametricHamacher, CcrNormalized, CauCR, Majority };
    std::string name;
    Kind kind;
    std::optional<FusionConfig> config;  // for Kind::Pecr

    // "frank" | "hamacher" | "ccr" | "caucr" | "majority" |
    // "pecr:<prop>:<comm>" | shorthand "<op>" meaning pecr:<op>:<op>
    static FusionRule parse(const std::string& spec);
};

struct CvReport {
    std::string rule;
    std::vector<double> fold_accuracies;  // repeats x folds entries
    double mean = 0.0;
    double stddev = 0.0;
    double wall_seconds = 0.0;
    std::vector<double> chosen_parameters;  // parametric rules, one per fold
};

struct CvOptions {
    int folds = 5;
    int repeats = 5;
    std::uint64_t seed = 0;
    int inner_folds = 3;  // parameter-selection CV on the training split
    bool parallel = true;
    // vacuous discount applied to per-view BPAs for CauCR only, which is
    // otherwise undefined on the dogmatic Bayesian inputs GNB produces
    double caucr_discount = 1e-4;
    // below this much total nonempty mass the cautious combination counts as
    // collapsed onto the empty set and the pignistic argmax degenerates
    double caucr_collapse_floor = 1e-6;
    std::vector<double> frank_grid = {0.01, 0.1, 0.5, 2.0, 10.0};
    std::vector<double> hamacher_grid = {0.1, 0.5, 1.0, 2.0, 5.0};
};

// Repeated stratified k-fold CV. All rules see identical per-sample BPAs
// within a fold; standardization is fitted on the training split only.
std::vector<CvReport> run_cv(const DatasetTable& table, const ViewProtocol& protocol,
                             const std::vector<FusionRule>& rules, const CvOptions& options);

}  // namespace pecr::multiview
