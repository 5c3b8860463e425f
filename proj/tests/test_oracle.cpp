#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/oracle.hpp"
#include "fusionkit/tadpole.hpp"
#include "support.hpp"

using namespace fusionkit;
using testing::rs;

namespace {

const char* const kSmall[] = {"A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"};

long long dimension(const std::vector<WeightMultiplicity>& system) {
    long long d = 0;
    for (const auto& w : system) d += w.multiplicity;
    return d;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("adjoint weight systems") {
    CHECK(dimension(adjoint_weight_system(*rs("A1"))) == 3);
    CHECK(dimension(adjoint_weight_system(*rs("G2"))) == 14);
    CHECK(dimension(adjoint_weight_system(*rs("B3"))) == 21);
}

TEST_CASE("finite folding") {
    Oracle a1(rs("A1"));
    auto same = a1.finite_fold(Weight{3});
    REQUIRE(same);
    CHECK(same->weight == Weight{3});
    CHECK(same->sign == 1);
    CHECK_FALSE(a1.finite_fold(Weight{0}));
    auto flipped = a1.finite_fold(Weight{-3});
    REQUIRE(flipped);
    CHECK(flipped->weight == Weight{3});
    CHECK(flipped->sign == -1);

    Oracle g2(rs("G2"));
    CHECK_FALSE(g2.finite_fold(Weight{0, 4}));
    auto folded = g2.finite_fold(Weight{-2, 7});
    REQUIRE(folded);
    CHECK(folded->weight.is_dominant());
}

TEST_CASE("Racah-Speiser examples") {
    Oracle a1(rs("A1"));
    auto spin1 = a1.racah_speiser_tensor(Weight{2});
    CHECK(spin1.entries == std::map<Weight, long long>{{Weight{0}, 1}, {Weight{2}, 1}, {Weight{4}, 1}});

    Oracle a2(rs("A2"));
    auto eight = a2.racah_speiser_tensor(Weight{1, 1});
    CHECK(eight.entries == std::map<Weight, long long>{{Weight{0, 0}, 1},
                                                      {Weight{1, 1}, 2},
                                                      {Weight{3, 0}, 1},
                                                      {Weight{0, 3}, 1},
                                                      {Weight{2, 2}, 1}});
    CHECK(eight.entries == testing::gt_tensor(Weight{1, 1}, Weight{1, 1}));
}

TEST_CASE("Racah-Speiser agrees with Gelfand-Tsetlin character products") {
    for (int r = 1; r <= 3; ++r) {
        auto sys = rs(("A" + std::to_string(r)).c_str());
        Oracle oracle(sys);
        for (int k = 0; k <= (r == 3 ? 2 : 3); ++k)
            for (const auto& mu : enumerate_level(*sys, k)) {
                CAPTURE(mu.str());
                CHECK(oracle.racah_speiser_tensor(mu.finite()).entries ==
                      testing::gt_tensor(sys->highest_root().labels, mu.finite()));
            }
    }
}

TEST_CASE("Kac-Walton examples") {
    Oracle a1(rs("A1"));
    CHECK(a1.kac_walton_fusion(AffineWeight{2, {0, 2}}).entries == std::map<Weight, long long>{{Weight{0}, 1}});
    CHECK(a1.kac_walton_fusion(AffineWeight{3, {1, 2}}).entries ==
          std::map<Weight, long long>{{Weight{0}, 1}, {Weight{2}, 1}});
    CHECK_THROWS_AS(a1.kac_walton_fusion(AffineWeight{1, {1, 0}}), LevelTooSmall);
    // The trivial weight system returns mu itself at any level.
    std::vector<WeightMultiplicity> trivial{{Weight{0}, 1}};
    CHECK(a1.kac_walton_fusion(trivial, AffineWeight{1, {0, 1}}).entries == std::map<Weight, long long>{{Weight{1}, 1}});
}

TEST_CASE("tensor dimension sum rule") {
    for (const char* name : {"A2", "A3", "B3", "C2", "C3", "G2"}) {
        CAPTURE(name);
        auto sys = rs(name);
        Oracle oracle(sys);
        const long long adjoint = static_cast<long long>(sys->root_count()) + sys->rank();
        for (int k = 0; k <= 4; ++k)
            for (const auto& mu : enumerate_level(*sys, k)) {
                Rational total(0);
                for (const auto& [nu, c] : oracle.racah_speiser_tensor(mu.finite()).entries) {
                    CHECK(c > 0);
                    total += Rational(c) * testing::weyl_dimension(*sys, nu);
                }
                CHECK(total == Rational(adjoint) * testing::weyl_dimension(*sys, mu.finite()));
            }
    }
}

TEST_CASE("oracle agrees with the closed-form rules") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        auto sys = rs(name);
        Oracle oracle(sys);
        AdjointRules rules(sys);
        for (int k = 2; k <= 6; ++k)
            for (const auto& mu : enumerate_level(*sys, k)) {
                CAPTURE(mu.str());
                auto fusion = oracle.kac_walton_fusion(mu);
                CHECK(fusion == rules.decompose(mu));
                for (const auto& [nu, m] : fusion.entries) CHECK(m > 0);
                auto tensor = oracle.racah_speiser_tensor(mu.finite());
                CHECK(tensor == rules.decompose_tensor(mu.finite()));
                CHECK(tensor.at(mu.finite()) == rules.diag_tensor(mu.finite()));
            }
    }
}

TEST_CASE("oracle tadpoles match enumeration") {
    for (const char* name : kSmall) {
        CAPTURE(name);
        auto sys = rs(name);
        Oracle oracle(sys);
        for (int k = 2; k <= 8; ++k) {
            CHECK(adjoint_tadpole_oracle(oracle, k) == adjoint_tadpole_enum(*sys, k));
            CHECK(zero_tadpole_oracle(oracle, k) == zero_tadpole_enum(*sys, k));
        }
    }
}

}
