#include <algorithm>
#include <set>

#include "fusionkit/algebra.hpp"
#include "fusionkit/error.hpp"
#include "support.hpp"

using namespace fusionkit;
using testing::rs;

namespace {

const Root& root_at(const RootSystem& sys, std::vector<int> coords) {
    int idx = sys.find_root_coords(coords);
    REQUIRE(idx >= 0);
    return sys.root(static_cast<std::size_t>(idx));
}

std::vector<AlgebraId> every_algebra(int max_rank) {
    std::vector<AlgebraId> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int r = 1; r <= max_rank; ++r)
            if (AlgebraId{f, r}.is_valid()) out.push_back({f, r});
    return out;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("names and rank bounds") {
    CHECK(AlgebraId::parse("b4") == AlgebraId{Family::B, 4});
    CHECK(AlgebraId::parse("E6").str() == "E6");
    CHECK_THROWS_AS(AlgebraId::parse("X3"), ParseError);
    CHECK_THROWS_AS(AlgebraId::parse("A"), ParseError);
    CHECK_THROWS_AS(AlgebraId::parse("B2"), InvalidRank);
    CHECK_THROWS_AS(AlgebraId::parse("D3"), InvalidRank);
    CHECK_THROWS_AS(AlgebraId::parse("E9"), InvalidRank);
    CHECK_THROWS_AS(AlgebraId::make(Family::F, 3), InvalidRank);
    CHECK(AlgebraId::parse("D5").is_simply_laced());
    CHECK_FALSE(AlgebraId::parse("C3").is_simply_laced());
}

TEST_CASE("small root systems") {
    auto a2 = rs("A2");
    CHECK(a2->positive_roots().size() == 3);
    CHECK(a2->highest_root().labels == Weight{1, 1});

    auto g2 = rs("G2");
    CHECK(g2->positive_roots().size() == 6);
    CHECK(g2->highest_root().coords == std::vector<int>{2, 3});
    CHECK(g2->highest_root().labels == Weight{1, 0});

    auto b3 = rs("B3");
    CHECK(std::vector<int>(b3->comarks().begin(), b3->comarks().end()) == std::vector<int>{1, 1, 2, 1});
}

TEST_CASE("root counts, comarks and dual Coxeter numbers") {
    struct Expect {
        const char* name;
        std::size_t positive;
        int dual_coxeter;
    };
    for (auto e : {Expect{"A1", 1, 2}, Expect{"A4", 10, 5}, Expect{"B3", 9, 5}, Expect{"B5", 25, 9},
                   Expect{"C2", 4, 3}, Expect{"C4", 16, 5}, Expect{"D4", 12, 6}, Expect{"D6", 30, 10},
                   Expect{"E6", 36, 12}, Expect{"E7", 63, 18}, Expect{"E8", 120, 30}, Expect{"F4", 24, 9},
                   Expect{"G2", 6, 4}}) {
        CAPTURE(e.name);
        auto sys = rs(e.name);
        CHECK(sys->positive_roots().size() == e.positive);
        CHECK(sys->root_count() == 2 * e.positive);
        CHECK(sys->dual_coxeter() == e.dual_coxeter);
        int sum = 0;
        for (int m : sys->comarks()) sum += m;
        CHECK(sum == e.dual_coxeter);
    }
    auto comarks = [](const char* n) {
        auto s = rs(n);
        return std::vector<int>(s->comarks().begin(), s->comarks().end());
    };
    CHECK(comarks("B5") == std::vector<int>{1, 1, 2, 2, 2, 1});
    CHECK(comarks("C4") == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(comarks("D5") == std::vector<int>{1, 1, 2, 2, 1, 1});
    CHECK(comarks("E6") == std::vector<int>{1, 1, 2, 2, 3, 2, 1});
    CHECK(comarks("F4") == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(comarks("G2") == std::vector<int>{1, 2, 1});
}

TEST_CASE("normalisation and inner products") {
    for (AlgebraId id : every_algebra(8)) {
        CAPTURE(id.str());
        auto sys = RootSystem::build(id);
        const Weight& theta = sys->highest_root().labels;
        CHECK(sys->inner_product(theta, theta) == Rational(2));
        // (theta, lambda) agrees with the comark sum on every fundamental weight.
        for (int i = 0; i < id.rank; ++i) {
            Weight w = Weight::zero(id.rank);
            w[i] = 1;
            CHECK(sys->inner_product(theta, w) == Rational(sys->theta_product(w)));
        }
        // The Cartan matrix rows are the labels of the simple roots.
        for (int i = 0; i < id.rank; ++i)
            for (int j = 0; j < id.rank; ++j)
                CHECK(sys->simple_root(i)[j] == sys->cartan_data().cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    CHECK(rs("A1")->inner_product(Weight{1}, Weight{1}) == Rational(1, 2));
    CHECK(rs("G2")->inner_product(rs("G2")->highest_root().labels, Weight{1, 0}) == Rational(2));
    CHECK_THROWS_AS(rs("A2")->inner_product(Weight{1}, Weight{1, 0}), AlgebraMismatch);
}

TEST_CASE("closure under reflections agrees with the explicit classical families") {
    for (Family f : {Family::B, Family::C, Family::D})
        for (int r = 2; r <= 8; ++r) {
            AlgebraId id{f, r};
            if (!id.is_valid()) continue;
            CAPTURE(id.str());
            auto closure = closure_roots(make_cartan_data(id).cartan);
            std::set<std::vector<int>> positive;
            for (const auto& c : closure)
                if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.insert(c);
            auto families = classical_family_roots(id);
            std::set<std::vector<int>> fam(families.begin(), families.end());
            CHECK(fam.size() == families.size());
            CHECK(fam == positive);
        }
}

TEST_CASE("alpha strings") {
    auto g2 = rs("G2");
    const Root& a1a2 = root_at(*g2, {1, 1});
    CHECK(g2->alpha_string_depth(a1a2, 1) == 2);
    CHECK(g2->alpha_string_depth(a1a2, 0) == 0);
    CHECK(g2->alpha_string_height(a1a2, 1) == 1);
    CHECK(g2->depth_weight(a1a2) == Weight{0, 2});
    CHECK(g2->depth_weight(g2->highest_root()).is_zero());
    CHECK(rs("A2")->depth_weight(root_at(*rs("A2"), {1, 0})) == Weight{0, 1});

    Root fake{{5, 5}, Weight{5, 5}};
    CHECK_THROWS_AS(g2->alpha_string_depth(fake, 0), NotARoot);

    for (AlgebraId id : every_algebra(8)) {
        CAPTURE(id.str());
        auto sys = RootSystem::build(id);
        for (int i = 0; i < id.rank; ++i) {
            CHECK(sys->alpha_string_depth(sys->highest_root(), i) == 0);
            const Root& simple = root_at(*sys, [&] {
                std::vector<int> c(static_cast<std::size_t>(id.rank), 0);
                c[static_cast<std::size_t>(i)] = 1;
                return c;
            }());
            CHECK(sys->alpha_string_height(simple, i) == 2);
        }
        for (std::size_t idx = 0; idx < sys->root_count(); ++idx)
            for (int i = 0; i < id.rank; ++i) {
                const Root& beta = sys->root(idx);
                CHECK(sys->height(idx, i) - sys->depth(idx, i) == beta.labels[i]);
                CHECK(sys->depth(idx, i) == sys->alpha_string_depth(beta, i));
                CHECK(sys->depth(idx, i) + sys->height(idx, i) + 1 <= 4);
            }
    }
}

TEST_CASE("shifted reflections") {
    auto a1 = rs("A1");
    CHECK(a1->shifted_reflect(0, Weight{2}) == Weight{-4});
    auto a3 = rs("A3");
    Weight fixed{2, -1, 3};
    CHECK(a3->shifted_reflect(1, fixed) == fixed);
    auto g2 = rs("G2");
    CHECK(g2->shifted_reflect(1, Weight{0, 1}) == Weight{0, 1} - 2 * g2->simple_root(1));
    // r_i is an involution on weights.
    Weight w{3, -2};
    CHECK(g2->reflect(0, g2->reflect(0, w)) == w);
}

TEST_CASE("Weyl dimension of the adjoint representation") {
    for (AlgebraId id : every_algebra(8)) {
        CAPTURE(id.str());
        auto sys = RootSystem::build(id);
        CHECK(testing::weyl_dimension(*sys, sys->highest_root().labels) ==
              Rational(static_cast<long long>(sys->root_count()) + id.rank));
        CHECK(testing::weyl_dimension(*sys, Weight::zero(id.rank)) == Rational(1));
    }
    CHECK(testing::weyl_dimension(*rs("G2"), Weight{0, 1}) == Rational(7));
    CHECK(testing::weyl_dimension(*rs("E6"), Weight{1, 0, 0, 0, 0, 0}) == Rational(27));
}

}
