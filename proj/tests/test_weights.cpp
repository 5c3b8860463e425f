#include <cstdlib>
#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/weights.hpp"
#include "support.hpp"

using namespace fusionkit;
using testing::rs;

TEST_SUITE("weights") {

TEST_CASE("weight text formats") {
    CHECK(Weight::parse("1,0,2") == Weight{1, 0, 2});
    CHECK(Weight::parse(" 3 , 4 ") == Weight{3, 4});
    CHECK(Weight{1, 0, 2}.str() == "1,0,2");
    CHECK_THROWS_AS(Weight::parse(""), ParseError);
    CHECK_THROWS_AS(Weight::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Weight::parse("1,a"), ParseError);

    AffineWeight w = AffineWeight::parse("(1; 0,2)", 3);
    CHECK(w.labels == std::vector<int>{1, 0, 2});
    CHECK(w.str() == "(1; 0,2)");
    CHECK(AffineWeight::parse(w.str(), 3) == w);
    CHECK_THROWS_AS(AffineWeight::parse("1; 0,2", 3), ParseError);
    CHECK_THROWS_AS((Weight{1, 2} + Weight{1}), AlgebraMismatch);
}

TEST_CASE("affinize") {
    CHECK(affinize(*rs("A1"), Weight{2}, 2).labels == std::vector<int>{0, 2});
    CHECK(affinize(*rs("G2"), Weight{0, 0}, 5).labels == std::vector<int>{5, 0, 0});
    auto b3 = rs("B3");
    AffineWeight w = affinize(*b3, Weight{1, 0, 1}, 4);
    CHECK(w.labels[0] == 2);
    CHECK(b3->inner_product(b3->highest_root().labels, Weight{1, 0, 1}) == Rational(4 - w.labels[0]));
    CHECK_THROWS_AS(affinize(*b3, Weight{1, 1, 1}, 3), LevelTooSmall);
}

TEST_CASE("nonzero affine labels") {
    CHECK(nonzero_affine_labels(AffineWeight{2, {2, 0}}) == 1);
    CHECK(nonzero_affine_labels(AffineWeight{2, {1, 1}}) == 2);
    CHECK(nonzero_affine_labels(AffineWeight{3, {1, 0, 2}}) == 2);
}

TEST_CASE("level polytope enumeration") {
    std::vector<AffineWeight> a1;
    for (const auto& w : enumerate_level(*rs("A1"), 2)) a1.push_back(w);
    REQUIRE(a1.size() == 3);
    CHECK(a1[0].labels == std::vector<int>{2, 0});
    CHECK(a1[1].labels == std::vector<int>{1, 1});
    CHECK(a1[2].labels == std::vector<int>{0, 2});

    CHECK(level_count(*rs("B3"), 2) == 7);
    CHECK(level_count(*rs("E8"), 0) == 1);

    for (int r = 1; r <= 5; ++r)
        for (int k = 0; k <= 8; ++k) {
            Rational binom = falling_power(Rational(k + r), r) / factorial(r);
            CHECK(Rational(level_count(*rs(("A" + std::to_string(r)).c_str()), k)) == binom);
        }

    for (const char* name : {"B4", "C3", "D4", "E6", "F4", "G2"}) {
        CAPTURE(name);
        auto sys = rs(name);
        for (int k = 0; k <= 5; ++k) {
            std::set<std::vector<int>> seen;
            PolytopeSums manual;
            const AffineWeight* prev = nullptr;
            AffineWeight last;
            for (const auto& w : enumerate_level(*sys, k)) {
                CHECK(w.is_dominant());
                CHECK(w.labels[0] + sys->theta_product(w.finite()) == k);
                CHECK(seen.insert(w.labels).second);
                if (prev) CHECK(last.finite() < w.finite());
                last = w;
                prev = &last;
                manual.count += 1;
                manual.nonzero_sum += nonzero_affine_labels(w);
            }
            CHECK(polytope_sums(sys->comarks(), k) == manual);
        }
    }
}

TEST_CASE("parallel sums are identical to the serial pass") {
    for (const char* name : {"A4", "B5", "D6", "E7"}) {
        auto sys = rs(name);
        for (int k : {0, 1, 7, 12}) {
            PolytopeSums serial = polytope_sums(sys->comarks(), k);
            for (unsigned t : {1u, 2u, 3u, 8u}) CHECK(polytope_sums_parallel(sys->comarks(), k, t) == serial);
        }
    }
}

TEST_CASE("thread count comes from the environment") {
    ::setenv("FUSIONKIT_THREADS", "1", 1);
    CHECK(configured_threads() == 1);
    ::setenv("FUSIONKIT_THREADS", "junk", 1);
    CHECK(configured_threads() >= 1);
    ::unsetenv("FUSIONKIT_THREADS");
    CHECK(configured_threads() >= 1);
}

}
