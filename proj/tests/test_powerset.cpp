#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pecr/powerset.hpp"

using namespace pecr;

namespace {

Frame frame_n(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return Frame(labels);
}

}  // namespace

TEST_CASE("frame construction rejects bad label sets") {
    CHECK_THROWS_AS(Frame({}), std::invalid_argument);
    CHECK_THROWS_AS(Frame({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Frame({"a", ""}), std::invalid_argument);
    CHECK_THROWS_AS(Frame({"a|b"}), std::invalid_argument);
    std::vector<std::string> too_many;
    for (int i = 0; i < 17; ++i) too_many.push_back("l" + std::to_string(i));
    CHECK_THROWS_AS(Frame{too_many}, std::invalid_argument);
}

TEST_CASE("subset names round-trip") {
    Frame f({"x", "y", "z"});
    CHECK(f.subset_name(0) == "");
    CHECK(f.subset_name(0b101) == "x|z");
    CHECK(f.parse_subset("x|z") == 0b101);
    CHECK(f.parse_subset("") == 0);
    CHECK_THROWS_AS(f.parse_subset("a|x"), std::invalid_argument);
}

TEST_CASE("cardinality") {
    CHECK(cardinality(0) == 0);
    CHECK(cardinality(0b101) == 2);
    CHECK(cardinality(0b111) == 3);
}

TEST_CASE("binom") {
    CHECK(binom(3, 2) == 3);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(16, 8) == 12870);  // frozen from the Pascal recurrence
    CHECK_THROWS_AS(binom(3, 4), std::domain_error);
}

TEST_CASE("layer enumerates by cardinality in ascending order") {
    auto f3 = frame_n(3);
    CHECK(layer(f3, 1) == std::vector<std::uint32_t>{0b001, 0b010, 0b100});
    CHECK(layer(f3, 2) == std::vector<std::uint32_t>{0b011, 0b101, 0b110});
    CHECK(layer(frame_n(4), 2).size() == 6);
    CHECK_THROWS_AS(layer(f3, 4), std::domain_error);

    for (int n = 1; n <= 8; ++n) {
        auto f = frame_n(n);
        std::size_t total = 0;
        for (int t = 0; t <= n; ++t) {
            auto l = layer(f, t);
            CHECK(l.size() == binom(n, t));
            total += l.size();
        }
        CHECK(total == f.subset_count());
    }
}

TEST_CASE("parents are the one-element supersets") {
    auto f3 = frame_n(3);
    CHECK(parents(f3, 0b001) == std::vector<std::uint32_t>{0b011, 0b101});
    CHECK(parents(f3, 0b011) == std::vector<std::uint32_t>{0b111});
    CHECK(parents(f3, 0b111).empty());
    CHECK(parents(frame_n(4), 0b0001).size() == 3);

    // brute-force superset scan agrees, and parent edges cover the next layer
    for (int n = 2; n <= 6; ++n) {
        auto f = frame_n(n);
        for (std::uint32_t s = 0; s < f.subset_count(); ++s) {
            auto par = parents(f, s);
            CHECK(par.size() == static_cast<std::size_t>(n - cardinality(s)));
            std::vector<std::uint32_t> brute;
            for (std::uint32_t g = 0; g < f.subset_count(); ++g)
                if ((s & ~g) == 0 && cardinality(g) == cardinality(s) + 1) brute.push_back(g);
            CHECK(par == brute);
        }
        for (int t = 0; t < n; ++t) {
            std::vector<bool> touched(f.subset_count(), false);
            for (std::uint32_t s : layer(f, t))
                for (std::uint32_t g : parents(f, s)) touched[g] = true;
            for (std::uint32_t g : layer(f, t + 1)) CHECK(touched[g]);
        }
    }
}

TEST_CASE("transforms match their serial references and invert each other") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int n : {1, 3, 6, 10}) {
        std::vector<double> base(std::size_t{1} << n);
        for (auto& v : base) v = dist(rng);

        auto a = base, b = base;
        superset_sum(a, n);
        superset_sum_serial(b, n);
        CHECK(a == b);
        // brute-force superset sums agree
        if (n <= 6) {
            for (std::uint32_t f = 0; f < base.size(); ++f) {
                double s = 0.0;
                for (std::uint32_t g = 0; g < base.size(); ++g)
                    if ((f & ~g) == 0) s += base[g];
                CHECK(a[f] == doctest::Approx(s).epsilon(1e-12));
            }
        }
        superset_mobius(a, n);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(a[i] == doctest::Approx(base[i]).epsilon(1e-10));

        auto c = base, d = base;
        subset_sum(c, n);
        subset_sum_serial(d, n);
        CHECK(c == d);
        subset_mobius(c, n);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(c[i] == doctest::Approx(base[i]).epsilon(1e-10));
    }
}
