#include <gtest/gtest.h>

#include "../support/oracle.hpp"
#include "localh/constructions.hpp"
#include "localh/error.hpp"

using namespace localh;

namespace {

Polynomial direct(const Subdivision& s) { return oracle::poly(oracle::local_h(s)); }

}  // namespace

TEST(Constructions, OpNames) {
    for (auto op : {OpKind::O1, OpKind::O2, OpKind::O3, OpKind::L32}) EXPECT_EQ(op_from_string(to_string(op)), op);
    EXPECT_THROW(op_from_string("o4"), Error);
}

TEST(Constructions, StellarTriangle) {
    const auto s = o1_stellar(Subdivision::trivial_simplex(3), {"v1", "v2", "v3"});
    EXPECT_EQ(local_h(s), Polynomial({0, 1, 1}));
    EXPECT_EQ(s.total().facets().size(), 3u);
    EXPECT_EQ(s.carrier(s.total().to_face(LabelSet{"z1"})), s.full_mask());
}

TEST(Constructions, StellarTwice) {
    auto s = Subdivision::trivial_simplex(3);
    s = o1_stellar(s, auto_facet(s));
    s = o1_stellar(s, auto_facet(s));
    EXPECT_EQ(local_h(s), Polynomial({0, 2, 2}));
    EXPECT_EQ(direct(s), Polynomial({0, 2, 2}));
}

TEST(Constructions, StellarEdge) {
    const auto s = o1_stellar(Subdivision::trivial_simplex(2), {"v1", "v2"});
    EXPECT_EQ(s.total().facets().size(), 2u);
    EXPECT_EQ(direct(s), Polynomial({0, 1}));
}

TEST(Constructions, StellarNeedsFacet) {
    const auto s = o1_stellar(Subdivision::trivial_simplex(3), {"v1", "v2", "v3"});
    EXPECT_THROW(o1_stellar(s, {"v1", "v2"}), Error);
    EXPECT_THROW(o1_stellar(s, {"v1", "v2", "v3"}), Error);
}

TEST(Constructions, Push) {
    const auto s = o2_push(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"});
    EXPECT_EQ(s.total().labeled_facets(),
              (std::vector<LabelSet>{{"v1", "v2", "v3", "v4"}, {"v1", "v2", "v3", "w1"}}));
    EXPECT_EQ(local_h(s), Polynomial({0, 0, -1}));
    EXPECT_EQ(direct(s), Polynomial({0, 0, -1}));
    EXPECT_TRUE(validate(s).valid_weak()) << validate(s).verdict();
    EXPECT_EQ(s.carrier(s.total().to_face(LabelSet{"v1", "v2", "v3"})), s.full_mask());
}

TEST(Constructions, PushPreconditions) {
    const auto edge = Subdivision::trivial_simplex(3);
    EXPECT_THROW(o2_push(edge, {"v1", "v2"}), Error);
    const auto s = o1_stellar(Subdivision::trivial_simplex(4), {"v1", "v2", "v3", "v4"});
    // {v1,v2,z1} is a (d-2)-face whose carrier is the whole simplex
    try {
        o2_push(s, {"v1", "v2", "z1"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
    // a face of carrier dimension d-3
    EXPECT_THROW(o2_push(s, {"v1", "v2"}), Error);
}

TEST(Constructions, JoinEdge) {
    const auto e = o3_join_edge(Subdivision::trivial_simplex(2));
    EXPECT_EQ(e.base().num_vertices(), 4u);
    EXPECT_EQ(local_h(e).padded(5), std::vector<Integer>(5, 0));
    const auto s = o3_join_edge(o1_stellar(Subdivision::trivial_simplex(3), {"v1", "v2", "v3"}));
    EXPECT_EQ(local_h(s), Polynomial({0, 0, 1, 1}));
    EXPECT_EQ(direct(s), Polynomial({0, 0, 1, 1}));
    EXPECT_TRUE(is_quasi_geometric(s));
    EXPECT_TRUE(validate(s).valid_weak()) << validate(s).verdict();
    const auto non_simplex = Subdivision::trivial(SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}}));
    EXPECT_THROW(o3_join_edge(non_simplex), Error);
}

TEST(Constructions, Lemma32Figure) {
    const auto s = lemma32_op(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"});
    EXPECT_EQ(local_h(s), Polynomial({0, 1, 0, 1}));
    EXPECT_EQ(direct(s), Polynomial({0, 1, 0, 1}));
    EXPECT_TRUE(is_quasi_geometric(s));
    EXPECT_TRUE(validate(s).valid_weak());
    EXPECT_EQ(s.total().facets().size(), 5u);
}

TEST(Constructions, Lemma32Twice) {
    auto s = lemma32_op(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"});
    ASSERT_TRUE(is_quasi_geometric(s));
    s = lemma32_op(s, {"v1", "v2", "w1"});
    EXPECT_EQ(local_h(s), Polynomial({0, 2, 0, 2}));
    EXPECT_EQ(direct(s), Polynomial({0, 2, 0, 2}));
    EXPECT_TRUE(is_quasi_geometric(s));
    EXPECT_TRUE(validate(s).valid_weak());
}

TEST(Constructions, AutoSelection) {
    const auto s = Subdivision::trivial_simplex(4);
    EXPECT_EQ(pushable_faces(s).front(), (LabelSet{"v1", "v2", "v3"}));
    EXPECT_TRUE(pushable_faces(Subdivision::trivial_simplex(3)).empty());
    OpStep step{OpKind::L32, std::nullopt};
    apply_step(s, step);
    EXPECT_EQ(step.face, (LabelSet{"v1", "v2", "v3"}));
}

TEST(Constructions, FreshLabels) {
    auto s = Subdivision::trivial_simplex(3);
    EXPECT_EQ(next_fresh_index(s), 1u);
    s = o1_stellar(s, auto_facet(s));
    EXPECT_EQ(next_fresh_index(s), 2u);
    s = o3_join_edge(s);
    EXPECT_TRUE(s.base().find_vertex("p2").has_value());
    EXPECT_TRUE(s.base().find_vertex("q3").has_value());
    EXPECT_TRUE(s.total().find_vertex("m4").has_value());
    EXPECT_EQ(next_fresh_index(s), 5u);
}

TEST(Constructions, EffectDeltas) {
    EXPECT_EQ(effect_delta(OpKind::O1, 5), Polynomial({0, 1, 1, 1, 1}));
    EXPECT_EQ(effect_delta(OpKind::O2, 6), Polynomial({0, 0, -1, -1, -1}));
    EXPECT_EQ(effect_delta(OpKind::L32, 5), Polynomial({0, 1, 0, 0, 1}));
    EXPECT_THROW(effect_delta(OpKind::O3, 4), Error);
}

TEST(Realize, Examples) {
    const auto point = realize_local_h(std::vector<long long>{0, 0});
    EXPECT_EQ(point.subdivision.total(), SimplicialComplex::simplex({"v1"}));
    const auto fig = realize_local_h(std::vector<long long>{0, 1, 0, 1, 0});
    EXPECT_EQ(local_h(fig.subdivision), Polynomial({0, 1, 0, 1}));
    EXPECT_TRUE(is_quasi_geometric(fig.subdivision));
    const auto r = realize_local_h(std::vector<long long>{0, 2, 3, 2, 0});
    EXPECT_EQ(direct(r.subdivision), Polynomial({0, 2, 3, 2}));
    EXPECT_EQ(r.word.seed_vertices, 2u);
    EXPECT_EQ(r.word.steps.size(), 6u);
}

TEST(Realize, EdgeSplitIntoPieces) {
    for (long long m = 0; m <= 4; ++m) {
        const auto r = realize_local_h(std::vector<long long>{0, m, 0});
        EXPECT_EQ(r.subdivision.total().facets().size(), static_cast<std::size_t>(m + 1));
        EXPECT_EQ(r.subdivision.total().dimension(), 1);
    }
}

TEST(Realize, RejectsInvalidTargets) {
    for (const auto& t : std::vector<std::vector<long long>>{{0}, {1, 0}, {0, 1, 1}, {0, -1, 0}, {0, 1, 2, 0, 0}, {0, 1}}) {
        try {
            realize_local_h(t);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidTarget);
        }
    }
}

TEST(Realize, ReplayReproduces) {
    const auto r = realize_local_h(std::vector<long long>{0, 1, 2, 2, 1, 0});
    const auto again = replay(r.word);
    EXPECT_EQ(again.subdivision.total(), r.subdivision.total());
    EXPECT_EQ(again.subdivision.carriers(), r.subdivision.carriers());
    EXPECT_EQ(again.word, r.word);
}

TEST(Random, TrivialWithoutSteps) {
    const auto r = random_subdivision(0, 4, 0);
    EXPECT_TRUE(r.word.steps.empty());
    EXPECT_EQ(r.subdivision.total(), r.subdivision.base());
}

TEST(Random, Deterministic) {
    const auto a = random_subdivision(1, 5, 5);
    const auto b = random_subdivision(1, 5, 5);
    EXPECT_EQ(a.word, b.word);
    const Polynomial l = local_h(a.subdivision);
    EXPECT_TRUE(is_symmetric(l, a.subdivision.base().num_vertices()));
    EXPECT_TRUE(is_nonnegative(l));
    const auto c = replay(a.word);
    EXPECT_EQ(c.subdivision.total(), a.subdivision.total());
}

class EffectProperty : public ::testing::TestWithParam<int> {};

TEST_P(EffectProperty, DeltaAndPreservation) {
    const auto seed = static_cast<std::uint64_t>(GetParam());
    Subdivision s = random_subdivision(seed, 6, seed % 4).subdivision;
    while (s.base().num_vertices() < 4) s = o3_join_edge(s);
    const std::size_t d = s.base().num_vertices();
    const Polynomial before = direct(s);

    const auto after_o1 = o1_stellar(s, auto_facet(s));
    EXPECT_EQ(direct(after_o1) - before, effect_delta(OpKind::O1, d));
    EXPECT_TRUE(is_quasi_geometric(after_o1));

    const auto g = pushable_faces(s).back();
    const auto after_l32 = lemma32_op(s, g);
    EXPECT_EQ(direct(after_l32) - before, effect_delta(OpKind::L32, d));
    EXPECT_TRUE(is_quasi_geometric(after_l32));
    EXPECT_TRUE(validate(after_l32).valid_weak());

    const auto after_o2 = o2_push(s, g);
    EXPECT_EQ(direct(after_o2) - before, effect_delta(OpKind::O2, d));
    EXPECT_TRUE(validate(after_o2).valid_weak());

    const auto after_o3 = o3_join_edge(s);
    EXPECT_EQ(direct(after_o3), before.shifted(1));
    EXPECT_TRUE(is_quasi_geometric(after_o3));
}

INSTANTIATE_TEST_SUITE_P(Seeds, EffectProperty, ::testing::Range(0, 12));
