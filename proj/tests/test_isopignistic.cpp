#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pecr/isopignistic.hpp"
#include "test_support.hpp"

using namespace pecr;
using namespace pecr::testing;

TEST_CASE("trans function between two BPAs with equal pignistic probability") {
    auto z = zeta(example1_m1(), example1_m2());
    CHECK(z[0b111] == doctest::Approx(-0.615).epsilon(1e-9));
    CHECK(z[0b011] == doctest::Approx(0.025).epsilon(1e-9));
    CHECK(z[0b101] == doctest::Approx(0.065).epsilon(1e-9));
    CHECK(z[0b110] == doctest::Approx(-0.185).epsilon(1e-9));
    CHECK(z[0b001] == 0.0);
    CHECK(z[0] == 0.0);

    auto forward = apply_zeta(example1_m1(), z);
    CHECK(max_abs_diff(forward.masses(), example1_m2().masses()) < 1e-12);
}

TEST_CASE("trans function rejects BPAs from different domains") {
    CHECK_THROWS_AS(zeta(example1_m1(), example4_m2()), std::domain_error);
}

TEST_CASE("trans function round-trip on random same-domain pairs") {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto m1 = random_bpa(rng, n);
        // Build a same-domain partner by averaging toward the pignistic BPA.
        auto pd = betp(m1);
        std::vector<double> v(m1.masses().size(), 0.0);
        v[0] = m1.empty_mass();
        const double scale = 1.0 - m1.empty_mass();
        for (int i = 0; i < n; ++i) v[1u << i] = scale * pd.p[static_cast<std::size_t>(i)];
        std::vector<double> mixed(v.size());
        for (std::size_t s = 0; s < v.size(); ++s)
            mixed[s] = 0.5 * v[s] + 0.5 * m1.masses()[s];
        MassFunction m2(m1.frame(), mixed);

        auto z = zeta(m1, m2);
        CHECK(max_abs_diff(apply_zeta(m1, z).masses(), m2.masses()) < 1e-10);
        // Inverse direction uses the negated flows.
        ZetaFunction neg{z.frame, z.values};
        for (double& x : neg.values) x = -x;
        CHECK(max_abs_diff(apply_zeta(m2, neg).masses(), m1.masses()) < 1e-10);
    }
}

TEST_CASE("canonical decomposition of the running example") {
    auto iso = decompose(example1_m1());
    const std::vector<double> expect = {0.02, 1, 0.872, 0.316, 0.811, 0.337, 0.082, 0.184};
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(std::abs(iso.values[i] - expect[i]) < 2e-3);
}

TEST_CASE("decomposition values agree with the direct formulas") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto m = random_bpa(rng, n);
        auto iso = decompose(m);
        auto pd = betp(m);
        auto poss = possibility_from_pignistic(pd);
        auto mbar = m.normalized();

        CHECK(iso[0] == doctest::Approx(m.empty_mass()));
        for (int i = 0; i < n; ++i)
            CHECK(iso[1u << i] ==
                  doctest::Approx(poss[static_cast<std::size_t>(i)]).epsilon(1e-12));
        for (std::uint32_t f = 0; f < m.frame().subset_count(); ++f) {
            if (cardinality(f) < 2) continue;
            double direct = 0.0;
            for (std::uint32_t a = 0; a < m.frame().subset_count(); ++a)
                if ((f & ~a) == 0)
                    direct += mbar[a] / static_cast<double>(
                                            binom(cardinality(a), cardinality(f)));
            CHECK(iso[f] == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("decomposition of the empty BPA is degenerate") {
    Frame f = frame_n(3);
    std::vector<double> v(8, 0.0);
    v[0] = 1.0;
    auto iso = decompose(MassFunction(f, v));
    CHECK(iso[0] == doctest::Approx(1.0));
    for (std::uint32_t s = 1; s < 8; ++s) CHECK(iso[s] == 0.0);
}

TEST_CASE("relative representation of the running example") {
    auto rel = relativize(example1_m1());
    const std::vector<double> expect = {0.02, 1, 0.872, 0.728, 0.811, 0.776, 0.189, 0.748};
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(std::abs(rel.values[i] - expect[i]) < 4e-3);
    CHECK(std::abs(rel.layer_scales[0] - 0.776) < 5e-3);
    CHECK(std::abs(rel.layer_scales[1] - 0.748) < 5e-3);

    auto profile = rel.layer_profile(2);
    REQUIRE(profile.size() == 3);
    CHECK(profile[0] == doctest::Approx(rel[0b011]));
    CHECK(profile[1] == doctest::Approx(rel[0b101]));
    CHECK(profile[2] == doctest::Approx(rel[0b110]));
}

TEST_CASE("layer scales stay in [0,1]") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto rel = relativize(random_bpa(rng, n));
        for (double s : rel.layer_scales) {
            CHECK(s >= -1e-12);
            CHECK(s <= 1.0 + 1e-9);
        }
        for (double v : rel.values) {
            CHECK(v >= -1e-12);
            CHECK(v <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("probability recovery from a normal possibility profile") {
    auto p = probability_from_possibility({0.4, 1.0, 0.6});
    CHECK(p[0] == doctest::Approx(0.4 / 3).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.4 / 3 + (0.6 - 0.4) / 2 + (1.0 - 0.6)).epsilon(1e-9));
    CHECK(p[2] == doctest::Approx(0.4 / 3 + (0.6 - 0.4) / 2).epsilon(1e-12));

    // Inverse of the consonant profile construction.
    std::mt19937_64 rng(13);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto m = random_bayesian(rng, n);
        std::vector<double> prob(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) prob[static_cast<std::size_t>(i)] = m[1u << i];
        PignisticDistribution pd{m.frame(), prob, 0.0};
        auto back = probability_from_possibility(possibility_from_pignistic(pd));
        CHECK(max_abs_diff(back, prob) < 1e-10);
    }
}

TEST_CASE("reconstruction inverts relativization") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 400; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto m = random_bpa(rng, n);
        auto back = reconstruct(relativize(m));
        CHECK(max_abs_diff(back.masses(), m.masses()) < 1e-9);
    }
}

TEST_CASE("reconstruction from a fuzzed profile is a valid BPA") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int it = 0; it < 400; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        Frame frame = frame_n(n);
        RelativeRepresentation rel{frame,
                                   std::vector<double>(frame.subset_count(), 0.0),
                                   std::vector<double>(static_cast<std::size_t>(n - 1), 0.0)};
        for (double& v : rel.values) v = unit(rng);
        // Normal singleton layer is required.
        std::uint32_t top = 1u << (rng() % n);
        rel.values[top] = 1.0;
        auto m = reconstruct(rel);
        auto rep = validate(m.frame(), m.masses());
        CHECK(rep.ok);
        CHECK(m.empty_mass() == doctest::Approx(rel.values[0]).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction of the degenerate profile is the empty BPA") {
    Frame frame = frame_n(3);
    RelativeRepresentation rel{frame, std::vector<double>(8, 0.0), {0.0, 0.0}};
    rel.values[0] = 1.0;
    auto m = reconstruct(rel);
    CHECK(m.empty_mass() == doctest::Approx(1.0));
}
