#include <gtest/gtest.h>

#include "localh/constructions.hpp"
#include "localh/cwbary.hpp"
#include "localh/error.hpp"
#include "localh/identities.hpp"

using namespace localh;

namespace {

Subdivision stellar_sd() { return sd_subdivision(o1_stellar(Subdivision::trivial_simplex(3), {"v1", "v2", "v3"})); }

}  // namespace

TEST(BoundaryH, Formula) {
    EXPECT_EQ(boundary_h_from_h(Polynomial{1, 10, 7}, 3), Polynomial({1, 4, 1}));
    EXPECT_EQ(boundary_h_from_h(Polynomial{1}, 1), Polynomial({1}));
    EXPECT_EQ(boundary_h_from_h(Polynomial{1, 3}, 2), Polynomial({1, 1}));
    try {
        boundary_h_from_h(Polynomial{1, 1}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(BoundaryH, Difference) {
    EXPECT_EQ(ball_h_difference_from_h(Polynomial{1, 10, 7}, 3), Polynomial({0, 6, 6}));
    EXPECT_EQ(ball_h_difference_from_h(Polynomial{1, 3}, 2), Polynomial({0, 2}));
    EXPECT_EQ(ball_h_difference_from_h(Polynomial{1}, 3), Polynomial({0, -1, -1}));
}

TEST(BoundaryH, AgreesWithComplexes) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_subdivision(seed, 5, 1 + seed % 6).subdivision;
        for (BaseMask f : s.base_faces()) {
            if (f == 0) continue;
            const auto k = restricted_complex(s, f);
            const auto n = static_cast<std::size_t>(mask_size(f));
            const Polynomial h = h_polynomial(k), dh = h_polynomial(boundary_complex(k));
            EXPECT_EQ(boundary_h_from_h(h, n), dh);
            EXPECT_EQ(ball_h_difference_from_h(h, n), h - dh);
            EXPECT_TRUE(is_symmetric(h - dh, n));
        }
    }
}

TEST(Lemma41, Examples) {
    EXPECT_EQ(lemma41_local_h(stellar_sd()), Polynomial({0, 7, 7}));
    for (std::size_t d = 1; d <= 6; ++d) EXPECT_TRUE(lemma41_local_h(Subdivision::trivial_simplex(d)).is_zero());
}

TEST(Thm44, Examples) {
    const auto s = stellar_sd();
    EXPECT_EQ(restriction_h_difference(s, s.full_mask()), Polynomial({0, 6, 6}));
    EXPECT_EQ(thm44_local_h(s), Polynomial({0, 7, 7}));
    for (std::size_t d = 1; d <= 6; ++d) EXPECT_TRUE(thm44_local_h(Subdivision::trivial_simplex(d)).is_zero());
    const auto fig = lemma32_op(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"});
    EXPECT_EQ(thm44_local_h(fig), Polynomial({0, 1, 0, 1}));
    EXPECT_EQ(lemma41_local_h(fig), Polynomial({0, 1, 0, 1}));
}

TEST(Thm44, EmptyFaceConvention) {
    const auto s = Subdivision::trivial_simplex(3);
    EXPECT_EQ(restriction_h_difference(s, 0), Polynomial({1}));
}

TEST(Identities, NeedSimplexBase) {
    const auto s = Subdivision::trivial(SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}}));
    EXPECT_THROW(lemma41_local_h(s), Error);
    EXPECT_THROW(thm44_local_h(s), Error);
    const auto report = verify_all(s);
    EXPECT_TRUE(report.all_match());
    EXPECT_EQ(report.records.size(), 1u);
}

TEST(VerifyAll, BarycentricSimplex) {
    const auto report = verify_all(sd_subdivision(Subdivision::trivial_simplex(4)));
    EXPECT_TRUE(report.all_match()) << report.to_table();
    EXPECT_TRUE(report.gamma.is_nonnegative());
    std::set<std::string> names;
    for (const auto& r : report.records) names.insert(r.name);
    for (const char* n : {"locality", "lemma41", "thm44", "remark48", "cor42", "eq23", "symmetry"})
        EXPECT_TRUE(names.count(n)) << n;
}

TEST(VerifyAll, FigureComplex) {
    const auto report = verify_all(lemma32_op(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"}));
    EXPECT_TRUE(report.all_match()) << report.to_table();
    EXPECT_EQ(report.gamma.gammas, (std::vector<Integer>{0, 1, -2}));
    EXPECT_FALSE(report.unimodal);
    EXPECT_TRUE(report.nonnegative);
}

TEST(VerifyAll, RecordsFailuresInsteadOfThrowing) {
    LabeledSubdivision l;
    l.base = SimplicialComplex::simplex({"1", "2"});
    l.facets = {{"a", "b"}, {"b", "c"}, {"a", "c"}};
    for (const auto& f : l.facets) l.carrier[f] = {"1", "2"};
    l.carrier[{"a"}] = {"1"};
    l.carrier[{"b"}] = {"2"};
    l.carrier[{"c"}] = {"1", "2"};
    const auto report = verify_all(Subdivision::from_labeled(l));
    EXPECT_FALSE(report.all_match());
}

class IdentityProperty : public ::testing::TestWithParam<int> {};

TEST_P(IdentityProperty, ThreeWayAgreement) {
    const auto seed = static_cast<std::uint64_t>(GetParam());
    const auto s = random_subdivision(seed, 5, 1 + seed % 6).subdivision;
    for (const auto& sub : {s, sd_subdivision(s)}) {
        const Polynomial l = local_h(sub);
        EXPECT_EQ(lemma41_local_h(sub), l);
        EXPECT_EQ(thm44_local_h(sub), l);
    }
    EXPECT_TRUE(local_gamma(sd_subdivision(s)).is_nonnegative());
    EXPECT_TRUE(verify_all(s).all_match());
}

INSTANTIATE_TEST_SUITE_P(Seeds, IdentityProperty, ::testing::Range(0, 20));
