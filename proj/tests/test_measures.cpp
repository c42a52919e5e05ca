#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "skat/fixtures.hpp"
#include "skat/measures.hpp"
#include "skat/protocols.hpp"

using namespace skat;
using fixtures::FixtureId;

namespace {

const std::vector<std::string> A{"A"};
const std::vector<std::string> B{"B"};
const std::vector<std::string> C{"C"};
const std::vector<std::string> E{"E"};
const std::vector<std::string> AB{"A", "B"};
const std::vector<std::string> BC{"B", "C"};
const std::vector<std::string> AC{"A", "C"};

}  // namespace

TEST_CASE("entropy on the six-row table") {
    auto p1 = fixtures::build(FixtureId::p1);
    CHECK(entropy(p1, A).value == doctest::Approx(1.0).epsilon(1e-14));

    DistributionBuilder b({{"X", 3, Role::honest}});
    b.add({2}, 1.0);
    CHECK(entropy(std::move(b).build(), {std::vector<std::string>{"X"}}).value == 0.0);

    // Eve marginal 1/3, 1/6 x4.
    double expected = std::log2(3.0) / 3.0 + (2.0 / 3.0) * std::log2(6.0);
    CHECK(entropy(p1, E).value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(entropy(p1, E).value == doctest::Approx(2.251629).epsilon(1e-6));
}

TEST_CASE("mutual information: filtered bit, independence, Eve's knowledge of A") {
    auto p1 = fixtures::build(FixtureId::p1);

    auto filtered = equality_filter(p1, "B", "C").filtered;
    CHECK(mutual_information(filtered, A, BC).value == doctest::Approx(1.0).epsilon(1e-14));

    DistributionBuilder b({{"A", 2, Role::honest}, {"B", 2, Role::honest}});
    for (Symbol x = 0; x < 2; ++x)
        for (Symbol y = 0; y < 2; ++y) b.add({x, y}, 0.25);
    CHECK(mutual_information(std::move(b).build(), A, B).value == 0.0);

    // E pins A down except on the weight-1/3 symbol 0.
    CHECK(mutual_information(p1, A, E).value == doctest::Approx(2.0 / 3).epsilon(1e-13));
    CHECK(mutual_information(p1, A, E).value ==
          doctest::Approx(oracles::kl_cmi(p1, {"A"}, {"E"}, {})).epsilon(1e-12));

    CHECK_THROWS_AS(mutual_information(p1, AB, A), validation_error);
}

TEST_CASE("conditional mutual information equals 1/3 on both splittings") {
    auto p1 = fixtures::build(FixtureId::p1);
    CHECK(std::abs(conditional_mutual_information(p1, AB, C, E).value - 1.0 / 3) < 1e-12);
    CHECK(std::abs(conditional_mutual_information(p1, BC, A, E).value - 1.0 / 3) < 1e-12);

    // A conditioner that determines x forces the measure to zero.
    DistributionBuilder b({{"X", 2, Role::honest},
                           {"Y", 2, Role::honest},
                           {"Z", 2, Role::eavesdropper}});
    b.add({0, 0, 0}, 0.25);
    b.add({0, 1, 0}, 0.25);
    b.add({1, 0, 1}, 0.25);
    b.add({1, 1, 1}, 0.25);
    auto copy = std::move(b).build();
    CHECK(conditional_mutual_information(copy, {std::vector<std::string>{"X"}},
                                         {std::vector<std::string>{"Y"}},
                                         {std::vector<std::string>{"Z"}})
              .value == 0.0);
}

TEST_CASE("CMI is symmetric and reduces to MI on an empty conditioner") {
    auto pmix = fixtures::build(FixtureId::pmix);
    CHECK(conditional_mutual_information(pmix, AB, C, E).value ==
          conditional_mutual_information(pmix, C, AB, E).value);
    CHECK(conditional_mutual_information(pmix, A, BC, {}).value ==
          mutual_information(pmix, A, BC).value);
}

TEST_CASE("CMI agrees with the KL-decomposition oracle and stays nonnegative") {
    for (auto id : {FixtureId::p1, FixtureId::p2, FixtureId::p3, FixtureId::pmix}) {
        auto d = fixtures::build(id);
        CHECK(conditional_mutual_information(d, AB, C, E).value ==
              doctest::Approx(oracles::kl_cmi(d, {"A", "B"}, {"C"}, {"E"})).epsilon(1e-11));
        CHECK(conditional_mutual_information(d, A, BC, E).value ==
              doctest::Approx(oracles::kl_cmi(d, {"A"}, {"B", "C"}, {"E"})).epsilon(1e-11));
    }
    auto rng = oracles::make_rng(1234);
    for (int i = 0; i < 40; ++i) {
        oracles::RandomDistOptions opt;
        opt.min_honest = opt.max_honest = 2;
        auto d = oracles::random_distribution(rng, opt);
        double lib = conditional_mutual_information(d, A, B, E).value;
        double oracle = oracles::kl_cmi(d, {"A"}, {"B"}, {"E"});
        CHECK(std::abs(lib - oracle) < 1e-11);
        CHECK(lib >= 0.0);
    }
}

TEST_CASE("measures are additive over iid powers") {
    auto p1 = fixtures::build(FixtureId::p1);
    double h = entropy(p1, AB).value;
    double mi = mutual_information(p1, A, BC).value;
    double cmi = conditional_mutual_information(p1, AB, C, E).value;
    for (int n = 2; n <= 4; ++n) {
        auto dn = iid_power(p1, n);
        CHECK(std::abs(entropy(dn, AB).value - n * h) < 1e-9);
        CHECK(std::abs(mutual_information(dn, A, BC).value - n * mi) < 1e-9);
        CHECK(std::abs(conditional_mutual_information(dn, AB, C, E).value - n * cmi) < 1e-9);
    }
}

TEST_CASE("relabeling Eve's alphabet never changes CMI") {
    auto rng = oracles::make_rng(77);
    for (auto id : {FixtureId::p1, FixtureId::pmix}) {
        auto d = fixtures::build(id);
        double base = conditional_mutual_information(d, AB, C, E).value;
        for (int i = 0; i < 100; ++i) {
            auto perm = oracles::random_permutation_channel(
                rng, d.variables().back().alphabet_size);
            auto relabeled = apply_channel(d, "E", perm);
            CHECK(std::abs(conditional_mutual_information(relabeled, AB, C, E).value - base) <
                  1e-9);
        }
    }
}

TEST_CASE("ck_lower_bound: a filtered secret bit, a flat product, and the raw table") {
    auto p1 = fixtures::build(FixtureId::p1);
    auto filtered = equality_filter(p1, "B", "C").filtered;
    CHECK(ck_lower_bound(filtered, A, BC, "E").value == doctest::Approx(1.0).epsilon(1e-14));

    DistributionBuilder b({{"A", 2, Role::honest},
                           {"B", 2, Role::honest},
                           {"E", 1, Role::eavesdropper}});
    for (Symbol x = 0; x < 2; ++x)
        for (Symbol y = 0; y < 2; ++y) b.add({x, y, 0}, 0.25);
    auto prod = std::move(b).build();
    CHECK(ck_lower_bound(prod, A, B, "E").value == 0.0);

    // Unfiltered A-vs-BC: I(A:BC) = 1/3 but Eve knows more, so the one-way
    // bound collapses to 0; in particular it stays within [0, 1/3].
    double raw = ck_lower_bound(p1, A, BC, "E").value;
    CHECK(raw == 0.0);
    CHECK(raw <= 1.0 / 3 + 1e-12);
}
