#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace grakit;
using testutil::pp;

namespace {

BettiTable betti_k(const GradedRingPresentation& R, int bound) {
    return betti_of(minimal_resolution(R, residue_field_presentation(R), bound));
}

}  // namespace

TEST_CASE("diagonal resolution over the quadric hypersurface") {
    auto R = testutil::ring_x2();
    BettiTable B = betti_k(R, 20);
    for (int i = 0; i <= 20; ++i)
        for (const auto& [ij, v] : B.entries)
            if (ij.first == i && v != 0) CHECK(ij.second == i);
    for (int i = 0; i <= 20; ++i) CHECK(B.at(i, i) == 1);
    CHECK(regularity_window(B) == 0);
    auto verdict = koszul_probe(R, 20);
    REQUIRE(std::holds_alternative<KoszulUpTo>(verdict));
    CHECK(std::get<KoszulUpTo>(verdict).bound == 20);
}

TEST_CASE("eventual periodic pattern over the cubic hypersurface") {
    auto R = testutil::ring_x3();
    BettiTable B = betti_k(R, 12);
    long long total = 0;
    for (const auto& [ij, v] : B.entries) total += v;
    CHECK(total == 13);  // one generator per homological degree
    for (int a = 0; 2 * a <= 12; ++a) CHECK(B.at(2 * a, 3 * a) == 1);
    for (int a = 0; 2 * a + 1 <= 12; ++a) CHECK(B.at(2 * a + 1, 3 * a + 1) == 1);
    CHECK(regularity_window(B) == 6);

    auto verdict = koszul_probe(R, 12);
    REQUIRE(std::holds_alternative<NotKoszul>(verdict));
    CHECK(std::get<NotKoszul>(verdict).i == 2);
    CHECK(std::get<NotKoszul>(verdict).j == 3);

    // first syzygy of k: window shifts up by one
    auto omega1 = syzygy_module(R, residue_field_presentation(R), 1);
    BettiTable B1 = betti_of(minimal_resolution(R, omega1, 12));
    CHECK(regularity_window(B1) == 7);
}

TEST_CASE("complete intersection of two quadrics") {
    auto R = testutil::ring_x2y2();
    BettiTable B = betti_k(R, 10);
    for (int i = 0; i <= 10; ++i) CHECK(B.at(i, i) == i + 1);
    CHECK(regularity_window(B) == 0);
}

TEST_CASE("maximal ideal presentation is minimal") {
    auto R = testutil::ring_x2y2();
    auto m = maximal_ideal_presentation(R);
    CHECK(m.cover.gen_degrees == std::vector<int>{1, 1});
    for (const auto& rel : m.relations)
        for (const auto& e : rel.entries)
            for (const auto& t : e.terms) CHECK(total_degree(t.mon) >= 1);
}

TEST_CASE("differentials are minimal and compose to zero") {
    auto R = testutil::ring_xy_z();
    Resolution res = minimal_resolution(R, residue_field_presentation(R), 5);
    for (const auto& cols : res.diffs)
        for (const auto& col : cols)
            for (const auto& e : col.entries)
                for (const auto& t : e.terms) CHECK(total_degree(t.mon) >= 1);
    // d_i after d_{i+1} vanishes in R
    for (std::size_t i = 0; i + 1 < res.diffs.size(); ++i) {
        for (const auto& col : res.diffs[i + 1]) {
            FreeElement image = fe_zero(res.frees[i].rank());
            for (std::size_t t = 0; t < col.entries.size(); ++t) {
                for (int g = 0; g < res.frees[i].rank(); ++g)
                    image.entries[g] = poly_add(
                        R.ctx, image.entries[g],
                        poly_mul(R.ctx, col.entries[t], res.diffs[i][t].entries[g]));
            }
            CHECK(reduce_entries(R, image).is_zero());
        }
    }
}

TEST_CASE("syzygy shift identity for the residue field") {
    auto R = testutil::ring_x2y2();
    BettiTable B = betti_k(R, 8);
    for (int m = 1; m <= 2; ++m) {
        auto omega = syzygy_module(R, residue_field_presentation(R), m);
        BettiTable Bm = betti_of(minimal_resolution(R, omega, 6));
        for (const auto& [ij, v] : Bm.entries) {
            if (v == 0) continue;
            CHECK(v == B.at(ij.first + m, ij.second));
        }
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 8; ++j)
                if (B.at(i + m, j) != 0) CHECK(Bm.at(i, j) == B.at(i + m, j));
    }
}

TEST_CASE("minimalization cancels unit entries") {
    auto R = testutil::ring_x2y2();
    const auto& v = R.var_names;
    // cover <e0, e1 deg 1> with relation e1 - x*e0: collapses to rank 1
    GradedModulePresentation pres;
    pres.cover.gen_degrees = {0, 1};
    pres.relations.push_back(FreeElement{{pp(R.ctx, v, "-x"), poly_constant(R.ctx, 1)}});
    auto min = minimalize_presentation(R, pres);
    CHECK(min.cover.gen_degrees == std::vector<int>{0});
    CHECK(min.relations.empty());
}

TEST_CASE("finite resolution detection") {
    // free module resolves instantly
    auto R = testutil::ring_x3();
    GradedModulePresentation free1;
    free1.cover.gen_degrees = {0};
    Resolution res = minimal_resolution(R, free1, 5);
    CHECK(res.finite);
    CHECK(res.diffs.empty());
    auto B = betti_of(res);
    CHECK(B.at(0, 0) == 1);
}

TEST_CASE("budget truncation marks the resolution") {
    auto R = testutil::ring_xy_z();
    Budget tiny = Budget::of(1000.0, 50);
    Resolution res = minimal_resolution(R, residue_field_presentation(R), 10, &tiny);
    CHECK(res.truncated_by_budget);
    CHECK(res.bound < 10);
}
