#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include "pecr/multiview.hpp"

using namespace pecr;
using namespace pecr::multiview;

#ifndef PECR_SOURCE_DIR
#define PECR_SOURCE_DIR "."
#endif

namespace {

std::string write_temp_csv(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << body;
    return path;
}

// Small separable three-class dataset: class c is centered at 4c on every
// feature, with a deterministic jitter.
DatasetTable synthetic_table(int per_class, int feature_count, std::uint64_t seed) {
    DatasetTable t;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int f = 0; f < feature_count; ++f) t.feature_names.push_back("f" + std::to_string(f));
    t.class_names = {"0", "1", "2"};
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < per_class; ++i) {
            std::vector<double> row(static_cast<std::size_t>(feature_count));
            for (auto& x : row) x = 4.0 * c + noise(rng);
            t.features.push_back(std::move(row));
            t.labels.push_back(c);
        }
    return t;
}

}  // namespace

TEST_CASE("csv loading") {
    auto path = write_temp_csv("pecr_ok.csv",
                               "a,b,label\n1.5,2.0,1\n0.5,1.25,0\n2.5,0.75,1\n");
    auto t = load_csv(path);
    CHECK(t.sample_count() == 3);
    CHECK(t.feature_count() == 2);
    CHECK(t.class_count() == 2);
    CHECK(t.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(t.features[0][0] == doctest::Approx(1.5));
    CHECK(t.labels == std::vector<int>{1, 0, 1});
    std::remove(path.c_str());

    auto bad = write_temp_csv("pecr_bad.csv", "a,b,label\n1.5,x,1\n");
    CHECK_THROWS_AS(load_csv(bad), std::runtime_error);
    std::remove(bad.c_str());
    CHECK_THROWS_AS(load_csv("/tmp/pecr_does_not_exist.csv"), std::runtime_error);

    auto ragged = write_temp_csv("pecr_ragged.csv", "a,b,label\n1.5,2.0,1\n1.0,2\n");
    CHECK_THROWS_AS(load_csv(ragged), std::runtime_error);
    std::remove(ragged.c_str());
}

TEST_CASE("checked-in datasets load") {
    auto wine = load_csv(std::string(PECR_SOURCE_DIR) + "/data/wine.csv");
    CHECK(wine.sample_count() == 178);
    CHECK(wine.feature_count() == 13);
    CHECK(wine.class_count() == 3);

    auto bc = load_csv(std::string(PECR_SOURCE_DIR) + "/data/breastcancer.csv");
    CHECK(bc.sample_count() == 569);
    CHECK(bc.feature_count() == 30);
    CHECK(bc.class_count() == 2);
}

TEST_CASE("view construction") {
    SUBCASE("contiguous with borrowing") {
        auto views = build_views(13, protocol_by_name("Wine-C1"));
        REQUIRE(views.size() == 3);
        CHECK(views[0].size() == 7);
        CHECK(views[1].size() == 6);
        CHECK(views[2].size() == 6);
        // base blocks 0-4 / 5-8 / 9-12, one borrowed feature per other view
        CHECK(views[0][0] == 0);
        CHECK(views[0][4] == 4);
        CHECK(std::count(views[0].begin(), views[0].end(), 5) == 1);
        CHECK(std::count(views[0].begin(), views[0].end(), 9) == 1);
    }

    SUBCASE("round robin") {
        auto views = build_views(64, protocol_by_name("D0-4-R6"));
        CHECK(views[0].size() == 34);
        CHECK(views[1].size() == 33);
        CHECK(views[2].size() == 33);
        CHECK(views[0][0] == 0);
        CHECK(views[1][0] == 1);
        CHECK(views[2][0] == 2);
    }

    SUBCASE("diagonal") {
        auto views = build_views(64, protocol_by_name("D0-4-D4"));
        CHECK(views[0].size() == 29);
        CHECK(views[1].size() == 30);
        CHECK(views[2].size() == 29);
        // feature index f belongs to base view ((f / 8) + (f % 8)) % 3
        CHECK(std::count(views[1].begin(), views[1].end(), 1) == 1);
        CHECK(std::count(views[0].begin(), views[0].end(), 0) == 1);
    }

    SUBCASE("every feature is covered and the protocol checks sizes") {
        for (const char* name : {"Wine-C1", "D0-4-R6", "D0-4-D4", "D5-9-R2", "BC-R4"}) {
            auto proto = protocol_by_name(name);
            auto views = build_views(proto.expected_features, proto);
            std::vector<int> seen(proto.expected_features, 0);
            for (const auto& v : views)
                for (auto idx : v) seen[idx]++;
            for (int c : seen) CHECK(c >= 1);
        }
        CHECK_THROWS_AS(build_views(10, protocol_by_name("Wine-C1")), std::invalid_argument);
        CHECK_THROWS_AS(protocol_by_name("nope"), std::invalid_argument);
    }
}

TEST_CASE("gaussian naive bayes") {
    // Two classes, one feature, hand-checkable moments.
    std::vector<std::vector<double>> x = {{0.0}, {2.0}, {10.0}, {12.0}};
    std::vector<int> y = {0, 0, 1, 1};
    auto model = gnb_fit(x, y, 2);
    CHECK(model.mean[0][0] == doctest::Approx(1.0));
    CHECK(model.mean[1][0] == doctest::Approx(11.0));
    CHECK(model.variance[0][0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::exp(model.class_log_prior[0]) == doctest::Approx(0.5));

    auto p = gnb_predict_proba(model, {1.0});
    CHECK(p[0] > 0.99);
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
    auto mid = gnb_predict_proba(model, {6.0});
    CHECK(mid[0] == doctest::Approx(0.5).epsilon(1e-9));

    // Zero-variance feature must not divide by zero thanks to smoothing.
    std::vector<std::vector<double>> xc = {{1.0, 0.0}, {1.0, 2.0}, {1.0, 10.0}, {1.0, 12.0}};
    auto degenerate = gnb_fit(xc, y, 2);
    auto pd = gnb_predict_proba(degenerate, {1.0, 1.0});
    CHECK(std::isfinite(pd[0]));
    CHECK(pd[0] > 0.99);
}

TEST_CASE("probabilities to BPA") {
    Frame f({"a", "b", "c"});
    auto m = proba_to_bpa(f, {0.2, 0.5, 0.3});
    CHECK(m.is_bayesian());
    CHECK(m[0b001] == doctest::Approx(0.2));
    CHECK(m[0b010] == doctest::Approx(0.5));
    CHECK(m[0b100] == doctest::Approx(0.3));
}

TEST_CASE("fusion rule parsing") {
    CHECK(FusionRule::parse("frank").kind == FusionRule::Kind::ParametricFrank);
    CHECK(FusionRule::parse("hamacher").kind == FusionRule::Kind::ParametricHamacher);
    CHECK(FusionRule::parse("ccr").kind == FusionRule::Kind::CcrNormalized);
    CHECK(FusionRule::parse("caucr").kind == FusionRule::Kind::CauCR);
    CHECK(FusionRule::parse("majority").kind == FusionRule::Kind::Majority);

    auto shorthand = FusionRule::parse("min");
    CHECK(shorthand.kind == FusionRule::Kind::Pecr);
    CHECK(shorthand.config->propensity_op.family() == OpFamily::Minimum);
    CHECK(shorthand.config->commitment_op.family() == OpFamily::Minimum);

    auto full = FusionRule::parse("pecr:product:max");
    CHECK(full.kind == FusionRule::Kind::Pecr);
    CHECK(full.config->propensity_op.family() == OpFamily::Product);
    CHECK(full.config->commitment_op.family() == OpFamily::Maximum);

    CHECK_THROWS_AS(FusionRule::parse("pecr:bogus:max"), std::invalid_argument);
    CHECK_THROWS_AS(FusionRule::parse(""), std::invalid_argument);
}

TEST_CASE("cross validation on a separable synthetic dataset") {
    auto table = synthetic_table(30, 6, 7);
    ViewProtocol proto{"synthetic", PartitionScheme::RoundRobin, 3, 0, 6,
                       {2, 2, 2}};

    std::vector<FusionRule> rules = {FusionRule::parse("min"), FusionRule::parse("product"),
                                     FusionRule::parse("ccr"), FusionRule::parse("caucr"),
                                     FusionRule::parse("majority")};
    CvOptions opt;
    opt.folds = 3;
    opt.repeats = 2;
    opt.seed = 42;

    auto reports = run_cv(table, proto, rules, opt);
    REQUIRE(reports.size() == rules.size());
    for (const auto& r : reports) {
        CAPTURE(r.rule);
        CHECK(r.fold_accuracies.size() == 6);
        CHECK(r.mean > 0.9);
        const double avg =
            std::accumulate(r.fold_accuracies.begin(), r.fold_accuracies.end(), 0.0) /
            static_cast<double>(r.fold_accuracies.size());
        CHECK(r.mean == doctest::Approx(avg).epsilon(1e-12));
    }

    SUBCASE("same seed reproduces, different seed perturbs folds") {
        auto again = run_cv(table, proto, rules, opt);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            REQUIRE(again[i].fold_accuracies.size() == reports[i].fold_accuracies.size());
            for (std::size_t j = 0; j < reports[i].fold_accuracies.size(); ++j)
                CHECK(again[i].fold_accuracies[j] == reports[i].fold_accuracies[j]);
        }

        CvOptions serial = opt;
        serial.parallel = false;
        auto ser = run_cv(table, proto, rules, serial);
        for (std::size_t i = 0; i < reports.size(); ++i)
            CHECK(ser[i].mean == doctest::Approx(reports[i].mean).epsilon(1e-12));
    }

    SUBCASE("parametric rules select a grid value per fold") {
        std::vector<FusionRule> parametric = {FusionRule::parse("frank")};
        CvOptions small = opt;
        small.repeats = 1;
        auto rep = run_cv(table, proto, parametric, small);
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].chosen_parameters.size() == 3);
        for (double v : rep[0].chosen_parameters) {
            bool on_grid = false;
            for (double g : small.frank_grid) on_grid = on_grid || g == v;
            CHECK(on_grid);
        }
        CHECK(rep[0].mean > 0.9);
    }
}

TEST_CASE("stratification keeps class proportions per fold") {
    // Unbalanced dataset: run CV and confirm no fold is starved of a class
    // (a starved class would crash gnb_fit or tank accuracy to chance).
    auto table = synthetic_table(12, 4, 9);
    // drop most of class 2
    DatasetTable trimmed;
    trimmed.feature_names = table.feature_names;
    trimmed.class_names = table.class_names;
    for (std::size_t i = 0; i < table.sample_count(); ++i) {
        if (table.labels[i] == 2 && (i % 3) != 0) continue;
        trimmed.features.push_back(table.features[i]);
        trimmed.labels.push_back(table.labels[i]);
    }
    ViewProtocol proto{"synthetic", PartitionScheme::RoundRobin, 3, 0, 4, {2, 1, 1}};
    CvOptions opt;
    opt.folds = 4;
    opt.repeats = 2;
    opt.seed = 3;
    auto rep = run_cv(trimmed, proto, {FusionRule::parse("product")}, opt);
    CHECK(rep[0].mean > 0.8);
}
