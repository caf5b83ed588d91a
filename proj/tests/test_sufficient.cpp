#include <doctest.h>

#include <utility>
#include <vector>

#include "factorkit/errors.hpp"
#include "factorkit/generators.hpp"
#include "factorkit/prng.hpp"
#include "factorkit/sufficient.hpp"
#include "test_support.hpp"

using namespace factorkit;
using namespace factorkit::test;

TEST_CASE("complete-factor validation names the first bad part") {
    Graph g = complete_graph(4);

    CliquePartition good{{VertexSet::of({0, 1}), VertexSet::of({2, 3})}};
    CHECK_FALSE(validate_complete_factor(g, good).has_value());

    CliquePartition empty_part{{VertexSet::of({0, 1, 2, 3}), VertexSet()}};
    auto msg = validate_complete_factor(g, empty_part);
    REQUIRE(msg.has_value());
    CHECK(msg->find("part 1") != std::string::npos);
    CHECK(msg->find("empty") != std::string::npos);

    CliquePartition out_of_range{{VertexSet::of({0, 1}), VertexSet::of({2, 3, 5})}};
    msg = validate_complete_factor(g, out_of_range);
    REQUIRE(msg.has_value());
    CHECK(msg->find("out of range") != std::string::npos);

    CliquePartition overlapping{{VertexSet::of({0, 1, 2}), VertexSet::of({2, 3})}};
    msg = validate_complete_factor(g, overlapping);
    REQUIRE(msg.has_value());
    CHECK(msg->find("overlaps") != std::string::npos);

    CliquePartition uncovered{{VertexSet::of({0, 1}), VertexSet::of({2})}};
    msg = validate_complete_factor(g, uncovered);
    REQUIRE(msg.has_value());
    CHECK(msg->find("cover vertex 3") != std::string::npos);

    Graph path = path_graph(4);
    CliquePartition not_clique{{VertexSet::of({0, 1}), VertexSet::of({2, 3})}};
    CHECK_FALSE(validate_complete_factor(path, not_clique).has_value());
    CliquePartition bad_clique{{VertexSet::of({0, 1, 2}), VertexSet::of({3})}};
    msg = validate_complete_factor(path, bad_clique);
    REQUIRE(msg.has_value());
    CHECK(msg->find("not a clique") != std::string::npos);
    CHECK(msg->find("{0,2}") != std::string::npos);
}

TEST_CASE("restrict_instance relabels graph, subset and bounds") {
    Graph g = cycle_graph(4);
    EdgeSubset h(g, {Edge(2, 3), Edge(0, 1)});
    VertexFunc lo({1, 2, 3, 4});
    VertexFunc hi({2, 3, 4, 5});
    RestrictedInstance sub = restrict_instance(g, h, lo, hi, VertexSet::of({0, 1}));
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.h.size() == 1);
    CHECK(sub.h.contains(0, 1));
    CHECK(sub.g.values() == std::vector<int>{3, 4});
    CHECK(sub.f.values() == std::vector<int>{4, 5});
    CHECK(sub.old_to_new == std::vector<int>{-1, -1, 0, 1});
    CHECK(sub.new_to_old == std::vector<int>{2, 3});

    RestrictedInstance same = restrict_instance(g, h, lo, hi, VertexSet());
    CHECK(same.graph.edges() == g.edges());
    CHECK(same.h.size() == h.size());
    CHECK(same.g == lo);

    CHECK_THROWS_AS(restrict_instance(g, h, lo, hi, VertexSet::full(4)), UsageError);
}

TEST_CASE("degree-ratio premise holds on complete graphs with flat bounds") {
    for (int n = 3; n <= 7; ++n) {
        Graph g = complete_graph(n);
        for (int k = 1; k < n; ++k) {
            VertexFunc r = VertexFunc::constant(n, k);
            SufficiencyReport rep = check_degree_ratio_premise(g, EdgeSubset(g), r, r);
            CHECK(rep.premise_holds);
            CHECK_FALSE(rep.violating_vertex.has_value());
            CHECK_FALSE(rep.violating_pair.has_value());
        }
    }
}

TEST_CASE("degree-ratio premise reports the first violation") {
    Graph star = star_graph(3);
    VertexFunc one = VertexFunc::constant(4, 1);

    // Degrees are fine but the ratio fails at the ordered pair (center, leaf).
    SufficiencyReport rep = check_degree_ratio_premise(star, EdgeSubset(star), one, one);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_pair.has_value());
    CHECK(*rep.violating_pair == std::make_pair(0, 1));
    CHECK_FALSE(rep.violating_vertex.has_value());

    // With f = 2 the leaves already fail the degree clause.
    VertexFunc two = VertexFunc::constant(4, 2);
    rep = check_degree_ratio_premise(star, EdgeSubset(star), one, two);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_vertex.has_value());
    CHECK(*rep.violating_vertex == 1);

    // Excluded edges tighten both clauses: a perfect matching inside K_6
    // breaks the ratio at the very first pair.
    Graph k6 = complete_graph(6);
    EdgeSubset matching(k6, {Edge(0, 1), Edge(2, 3), Edge(4, 5)});
    VertexFunc one6 = VertexFunc::constant(6, 1);
    rep = check_degree_ratio_premise(k6, matching, one6, one6);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_pair.has_value());
    CHECK(*rep.violating_pair == std::make_pair(0, 0));
}

TEST_CASE("the diagonal pair pins down the premise") {
    // At x = y the ratio inequality reads g(x)(d(x)-d_H(x)) >= d(x)f(x),
    // which with g <= f can only hold when g(x) = f(x) and d_H(x) = 0.  So a
    // single excluded edge sinks the premise even on a dense host.
    Graph k8 = complete_graph(8);
    VertexFunc three = VertexFunc::constant(8, 3);
    SufficiencyReport clean = check_degree_ratio(k8, EdgeSubset(k8), three, three, true);
    CHECK(clean.premise_holds);
    CHECK(clean.conclusion_checked);
    CHECK(clean.conclusion_holds);

    EdgeSubset one_edge(k8, {Edge(0, 1)});
    SufficiencyReport rep = check_degree_ratio_premise(k8, one_edge, three, three);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_pair.has_value());
    CHECK(*rep.violating_pair == std::make_pair(0, 0));

    VertexFunc four = VertexFunc::constant(8, 4);
    rep = check_degree_ratio_premise(k8, EdgeSubset(k8), three, four);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_pair.has_value());
    CHECK(*rep.violating_pair == std::make_pair(0, 0));
}

TEST_CASE("degree-ratio conclusion verification stays consistent") {
    SUBCASE("without verification the conclusion fields stay unset") {
        Graph g = complete_graph(4);
        VertexFunc one = VertexFunc::constant(4, 1);
        SufficiencyReport rep = check_degree_ratio(g, EdgeSubset(g), one, one, false);
        CHECK(rep.premise_holds);
        CHECK_FALSE(rep.conclusion_checked);
    }
    SUBCASE("failed premise still reports the checked conclusion") {
        Graph star = star_graph(3);
        VertexFunc one = VertexFunc::constant(4, 1);
        SufficiencyReport rep = check_degree_ratio(star, EdgeSubset(star), one, one, true);
        CHECK_FALSE(rep.premise_holds);
        CHECK(rep.conclusion_checked);
        CHECK_FALSE(rep.conclusion_holds);  // the star really has no 1-factor
    }
}

TEST_CASE("degree-ratio premise never overclaims on random instances") {
    Prng rng(83);
    int premise_held = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        // Mix in many complete graphs; sparse random graphs rarely satisfy the premise.
        std::uint64_t p = trial % 4 == 0 ? kProbabilityOne : kProbabilityOne / 2;
        Graph g = gen_random_graph(n, p, rng);
        std::uint64_t q = trial % 4 == 0 ? 0 : kProbabilityOne / 8;
        EdgeSubset h = gen_random_edge_subset(g, q, rng);
        int k = 1 + static_cast<int>(rng.next_below(2));
        VertexFunc r = VertexFunc::constant(n, k);
        SufficiencyReport rep = check_degree_ratio(g, h, r, r, true);
        CHECK(rep.conclusion_checked);
        if (rep.premise_holds) {
            ++premise_held;
            CHECK(rep.conclusion_holds);
        }
    }
    CHECK(premise_held > 20);
}

TEST_CASE("two triangles of K_6 witness the partition sufficiency") {
    Graph k6 = complete_graph(6);
    CliquePartition parts{{VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}};
    VertexFunc one = VertexFunc::constant(6, 1);
    SufficiencyReport rep = check_clique_partition(k6, parts, EdgeSubset(k6), one, one, true);
    CHECK(rep.premise_holds);
    CHECK_FALSE(rep.violating_part.has_value());
    CHECK(rep.conclusion_checked);
    CHECK(rep.conclusion_holds);
}

TEST_CASE("opposite edges of a four-cycle form a usable partition") {
    Graph c4 = cycle_graph(4);
    CliquePartition parts{{VertexSet::of({0, 1}), VertexSet::of({2, 3})}};
    VertexFunc one = VertexFunc::constant(4, 1);
    SufficiencyReport rep = check_clique_partition(c4, parts, EdgeSubset(c4), one, one, true);
    CHECK(rep.premise_holds);
    CHECK(rep.conclusion_holds);
}

TEST_CASE("partition premise fails when a leftover part is too thin") {
    Graph k6 = complete_graph(6);
    CliquePartition parts{{VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}};
    // After removing one triangle the rest is K_3, whose max load is 2 < 3.
    VertexFunc three = VertexFunc::constant(6, 3);
    SufficiencyReport rep = check_clique_partition(k6, parts, EdgeSubset(k6), three, three, true);
    CHECK_FALSE(rep.premise_holds);
    REQUIRE(rep.violating_part.has_value());
    CHECK(*rep.violating_part == 0);
    CHECK(rep.conclusion_checked);
}

TEST_CASE("partition checks reject malformed input") {
    Graph k4 = complete_graph(4);
    VertexFunc one = VertexFunc::constant(4, 1);
    CliquePartition single{{VertexSet::of({0, 1, 2, 3})}};
    CHECK_THROWS_AS(check_clique_partition(k4, single, EdgeSubset(k4), one, one, false),
                    UsageError);
    CliquePartition overlap{{VertexSet::of({0, 1}), VertexSet::of({1, 2, 3})}};
    CHECK_THROWS_AS(check_clique_partition(k4, overlap, EdgeSubset(k4), one, one, false),
                    UsageError);
}

TEST_CASE("partition sufficiency never overclaims on generated instances") {
    Prng rng(89);
    int premise_held = 0;
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<int> sizes;
        int parts = 2 + static_cast<int>(rng.next_below(2));
        for (int i = 0; i < parts; ++i) sizes.push_back(2 + static_cast<int>(rng.next_below(3)));
        std::uint64_t p_extra = trial % 3 == 0 ? kProbabilityOne : kProbabilityOne / 2;
        CliqueInstance ci = gen_clique_partition_instance(sizes, p_extra, rng);
        std::uint64_t q = trial % 2 == 0 ? 0 : kProbabilityOne / 8;
        EdgeSubset h = gen_random_edge_subset(ci.graph, q, rng);
        VertexFunc one = VertexFunc::constant(ci.graph.vertex_count(), 1);
        SufficiencyReport rep = check_clique_partition(ci.graph, ci.partition, h, one, one, true);
        if (rep.premise_holds) {
            ++premise_held;
            CHECK(rep.conclusion_holds);
        } else {
            REQUIRE(rep.violating_part.has_value());
            // The reported part really fails its restricted check.
            RestrictedInstance sub = restrict_instance(ci.graph, h, one, one,
                                                       ci.partition.parts[*rep.violating_part]);
            CHECK_FALSE(check_all_gf_excluding(sub.graph, sub.h, sub.g, sub.f).holds);
        }
    }
    CHECK(premise_held > 20);
}
