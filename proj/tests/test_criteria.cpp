#include <doctest.h>

#include <cstdint>
#include <vector>

#include "factorkit/criteria.hpp"
#include "factorkit/errors.hpp"
#include "factorkit/factor.hpp"
#include "factorkit/oracle.hpp"
#include "factorkit/prng.hpp"
#include "test_support.hpp"

using namespace factorkit;
using namespace factorkit::test;

namespace {

bool same_report(const DeficiencyReport& a, const DeficiencyReport& b) {
    return a.holds == b.holds && a.min_deficiency == b.min_deficiency &&
           a.witness_S == b.witness_S && a.witness_T == b.witness_T && a.scanned == b.scanned;
}

struct RandomInstance {
    Graph graph;
    EdgeSubset h;
    VertexFunc g;
    VertexFunc f;
};

RandomInstance random_instance(Prng& rng, int n_max, std::uint64_t edge_mod, std::uint64_t h_mod) {
    int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_max - 1)));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() % edge_mod == 0) edges.push_back(Edge(u, v));
    Graph graph(n, edges);
    std::vector<Edge> members;
    for (const Edge& e : graph.edges())
        if (rng.next() % h_mod == 0) members.push_back(e);
    EdgeSubset h(graph, members);
    std::vector<int> gv(n), fv(n);
    for (int v = 0; v < n; ++v) {
        gv[v] = 1 + static_cast<int>(rng.next_below(2));
        fv[v] = gv[v] + static_cast<int>(rng.next_below(2));
    }
    return RandomInstance{graph, h, VertexFunc(gv), VertexFunc(fv)};
}

}  // namespace

TEST_CASE("t_set_anstee flags vertices starved below g") {
    Graph g = star_graph(3);
    VertexFunc one = VertexFunc::constant(4, 1);
    CHECK(t_set_anstee(g, VertexSet(), one) == VertexSet());
    CHECK(t_set_anstee(g, VertexSet::of({0}), one) == VertexSet::of({1, 2, 3}));
    CHECK(t_set_anstee(g, VertexSet::of({1}), one) == VertexSet());
    CHECK(t_set_anstee(g, VertexSet::of({1, 2, 3}), one) == VertexSet::of({0}));
}

TEST_CASE("t_set_excluding corrects degrees for the excluded subgraph") {
    Graph g = complete_graph(3);
    EdgeSubset h(g, {Edge(0, 2)});
    VertexFunc one = VertexFunc::constant(3, 1);
    CHECK(t_set_excluding(g, h, VertexSet(), one) == VertexSet());
    CHECK(t_set_excluding(g, h, VertexSet::of({1}), one) == VertexSet::of({0, 2}));
    // With 0 removed, e_H(2, S) cancels the d_H correction at vertex 2.
    CHECK(t_set_excluding(g, h, VertexSet::of({0}), one) == VertexSet());
}

TEST_CASE("excluding_deficiency on hand-checked subsets") {
    Graph g = complete_graph(3);
    EdgeSubset h(g, {Edge(0, 2)});
    VertexFunc one = VertexFunc::constant(3, 1);
    CHECK(excluding_deficiency(g, h, one, one, VertexSet()) == 0);
    CHECK(excluding_deficiency(g, h, one, one, VertexSet::of({1})) == -1);
    CHECK(excluding_deficiency(g, h, one, one, VertexSet::of({0})) == 1);
    CHECK(excluding_deficiency(g, h, one, one, VertexSet::full(3)) == 3);
}

TEST_CASE("star fails the single-factor criterion at its center") {
    Graph g = star_graph(3);
    VertexFunc one = VertexFunc::constant(4, 1);
    DeficiencyReport r = check_fractional_gf(g, one, one);
    CHECK_FALSE(r.holds);
    CHECK(r.min_deficiency == -2);
    CHECK(r.witness_S == VertexSet::of({0}));
    CHECK(r.witness_T == VertexSet::of({1, 2, 3}));
    CHECK(r.scanned == 16);
}

TEST_CASE("triangle minus one edge has no excluded 1-factor") {
    Graph g = complete_graph(3);
    EdgeSubset h(g, {Edge(0, 2)});
    VertexFunc one = VertexFunc::constant(3, 1);
    DeficiencyReport r = check_all_gf_excluding(g, h, one, one);
    CHECK_FALSE(r.holds);
    CHECK(r.min_deficiency == -1);
    CHECK(r.witness_S == VertexSet::of({1}));
    CHECK(r.witness_T == VertexSet::of({0, 2}));
    CHECK(r.scanned == 8);
}

TEST_CASE("four-cycle keeps its 1-factor after excluding one edge") {
    Graph g = cycle_graph(4);
    EdgeSubset h(g, {Edge(0, 1)});
    VertexFunc one = VertexFunc::constant(4, 1);
    DeficiencyReport r = check_all_gf_excluding(g, h, one, one);
    CHECK(r.holds);
    CHECK(r.min_deficiency == 0);
    CHECK(r.witness_S == VertexSet());
    CHECK(r.scanned == 16);
}

// The all-factors criterion can fail even where the single-factor one holds:
// on a triangle with g = 1, f = 2 the function r = (2,2,1) has no fractional
// r-factor (the unique solution needs 3/2 on one edge).
TEST_CASE("triangle with spread bounds fails the all-factors criterion") {
    Graph g = complete_graph(3);
    VertexFunc lo = VertexFunc::constant(3, 1);
    VertexFunc hi = VertexFunc::constant(3, 2);

    DeficiencyReport single = check_fractional_gf(g, lo, hi);
    CHECK(single.holds);

    DeficiencyReport all = check_all_gf(g, lo, hi);
    CHECK_FALSE(all.holds);
    CHECK(all.min_deficiency == -1);
    CHECK(all.witness_S == VertexSet::of({0}));
    CHECK(all.witness_T == VertexSet::of({1, 2}));

    OracleVerdict oracle = brute_force_all_excluding(g, EdgeSubset(g), lo, hi);
    CHECK_FALSE(oracle.all_exist);
    REQUIRE(oracle.first_failing_r.has_value());
    CHECK(oracle.first_failing_r->values() == std::vector<int>{2, 2, 1});
}

TEST_CASE("single-factor criterion agrees with the flow constructor") {
    // Exhaustive: every graph on up to 4 vertices, every g,f over {1,2}.
    for (int n = 2; n <= 4; ++n) {
        for_each_labeled_graph(n, [n](const Graph& g) {
            std::vector<int> gv(n, 1), fv(n, 1);
            // Per-vertex choices (g,f) in {(1,1),(1,2),(2,2)} via base-3 odometer.
            int combos = 1;
            for (int i = 0; i < n; ++i) combos *= 3;
            for (int code = 0; code < combos; ++code) {
                int c = code;
                for (int v = 0; v < n; ++v) {
                    int pick = c % 3;
                    c /= 3;
                    gv[v] = pick == 2 ? 2 : 1;
                    fv[v] = pick == 0 ? 1 : 2;
                }
                VertexFunc lo(gv), hi(fv);
                bool checker = check_fractional_gf(g, lo, hi).holds;
                auto witness = construct_fractional_factor(g, lo, hi);
                REQUIRE(checker == witness.has_value());
                if (witness) CHECK_FALSE(validate_witness(g, *witness, lo, hi, EdgeSubset(g)).has_value());
            }
        });
    }
}

TEST_CASE("single-factor criterion agrees with the constructor on random graphs") {
    Prng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        RandomInstance inst = random_instance(rng, 10, 2, 4);
        bool checker = check_fractional_gf(inst.graph, inst.g, inst.f).holds;
        auto witness = construct_fractional_factor(inst.graph, inst.g, inst.f);
        REQUIRE(checker == witness.has_value());
    }
}

TEST_CASE("exclusion checker agrees with the brute-force oracle, exhaustive n=3") {
    for_each_labeled_graph(3, [](const Graph& g) {
        for_each_edge_subset(g, [&](const EdgeSubset& h) {
            for (int code = 0; code < 27; ++code) {
                int c = code;
                std::vector<int> gv(3), fv(3);
                for (int v = 0; v < 3; ++v) {
                    int pick = c % 3;
                    c /= 3;
                    gv[v] = pick == 2 ? 2 : 1;
                    fv[v] = pick == 0 ? 1 : 2;
                }
                VertexFunc lo(gv), hi(fv);
                bool checker = check_all_gf_excluding(g, h, lo, hi).holds;
                OracleVerdict oracle = brute_force_all_excluding(g, h, lo, hi);
                REQUIRE(checker == oracle.all_exist);
            }
        });
    });
}

TEST_CASE("exclusion checker agrees with the brute-force oracle on random instances") {
    Prng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        RandomInstance inst = random_instance(rng, 7, 2, 3);
        bool checker = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f).holds;
        OracleVerdict oracle = brute_force_all_excluding(inst.graph, inst.h, inst.g, inst.f);
        REQUIRE(checker == oracle.all_exist);
    }
}

TEST_CASE("exclusion check equals the check on the reduced graph") {
    Prng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        RandomInstance inst = random_instance(rng, 9, 2, 3);
        DeficiencyReport direct = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f);
        Graph reduced = inst.graph.remove_edges(inst.h);
        DeficiencyReport via_reduction = check_all_gf(reduced, inst.g, inst.f);
        CHECK(same_report(direct, via_reduction));
    }
}

TEST_CASE("empty exclusion specializes to the all-factors check") {
    Prng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        RandomInstance inst = random_instance(rng, 9, 2, 3);
        DeficiencyReport empty_h = check_all_gf_excluding(inst.graph, EdgeSubset(inst.graph),
                                                          inst.g, inst.f);
        DeficiencyReport plain = check_all_gf(inst.graph, inst.g, inst.f);
        CHECK(same_report(empty_h, plain));
    }
}

TEST_CASE("excluding more edges never repairs a failure") {
    Prng rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        RandomInstance inst = random_instance(rng, 8, 2, 3);
        // Grow a super-subgraph of h.
        std::vector<Edge> super = inst.h.edges();
        for (const Edge& e : inst.graph.edges())
            if (!inst.h.contains(e.u, e.v) && rng.next() % 3 == 0) super.push_back(e);
        EdgeSubset h_super(inst.graph, super);
        bool with_super = check_all_gf_excluding(inst.graph, h_super, inst.g, inst.f).holds;
        bool with_sub = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f).holds;
        if (with_super) CHECK(with_sub);
    }
}

// At S = empty the deficiency is a sum of d_G(x) - d_H(x) - f(x) over the
// starved vertices, so a passing verdict needs that margin at every vertex.
TEST_CASE("a passing verdict implies enough non-excluded degree everywhere") {
    Prng rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        RandomInstance inst = random_instance(rng, 8, 2, 3);
        if (!check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f).holds) continue;
        for (int x = 0; x < inst.graph.vertex_count(); ++x)
            CHECK(inst.graph.degree(x) - inst.h.degree(x) >= inst.f[x]);
    }
}

TEST_CASE("with g = f the verdict matches direct construction") {
    Prng rng(67);
    for (int trial = 0; trial < 150; ++trial) {
        RandomInstance inst = random_instance(rng, 8, 2, 3);
        VertexFunc r = inst.g;
        bool checker = check_all_gf_excluding(inst.graph, inst.h, r, r).holds;
        bool built = construct_excluding(inst.graph, inst.h, r).has_value();
        CHECK(checker == built);
    }
}

TEST_CASE("taking S = V leaves deficiency g(V)") {
    Graph g = cycle_graph(5);
    EdgeSubset h(g, {Edge(0, 1)});
    VertexFunc lo = VertexFunc::constant(5, 1);
    VertexFunc hi = VertexFunc::constant(5, 2);
    std::uint64_t full = VertexSet::full(5).bits();
    ScanResult r = scan_excluding_serial(g, h, lo, hi, full, full + 1);
    CHECK(r.min_deficiency == lo.sum());
    CHECK(r.witness_mask == full);
}

TEST_CASE("parallel scans match the serial reference bit for bit") {
    Prng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        RandomInstance inst = random_instance(rng, 10, 2, 3);
        std::uint64_t total = std::uint64_t{1} << inst.graph.vertex_count();
        ScanResult serial = scan_excluding_serial(inst.graph, inst.h, inst.g, inst.f, 0, total);
        ScanResult serial_frac = scan_fractional_serial(inst.graph, inst.g, inst.f, 0, total);
        for (int jobs : {1, 2, 3, 5, 8}) {
            ScanResult par = scan_excluding_parallel(inst.graph, inst.h, inst.g, inst.f, jobs);
            CHECK(par.min_deficiency == serial.min_deficiency);
            CHECK(par.witness_mask == serial.witness_mask);
            ScanResult parf = scan_fractional_parallel(inst.graph, inst.g, inst.f, jobs);
            CHECK(parf.min_deficiency == serial_frac.min_deficiency);
            CHECK(parf.witness_mask == serial_frac.witness_mask);
        }
    }
}

TEST_CASE("report is identical for every job count") {
    Prng rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        RandomInstance inst = random_instance(rng, 10, 2, 3);
        DeficiencyReport base = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f,
                                                       CheckOptions{kDefaultSubsetCap, 1});
        for (int jobs : {2, 3, 8}) {
            DeficiencyReport other = check_all_gf_excluding(inst.graph, inst.h, inst.g, inst.f,
                                                            CheckOptions{kDefaultSubsetCap, jobs});
            CHECK(same_report(base, other));
        }
    }
}

TEST_CASE("all-factors success implies single-factor success") {
    Prng rng(79);
    for (int trial = 0; trial < 150; ++trial) {
        RandomInstance inst = random_instance(rng, 8, 2, 3);
        if (check_all_gf(inst.graph, inst.g, inst.f).holds)
            CHECK(check_fractional_gf(inst.graph, inst.g, inst.f).holds);
    }
}

TEST_CASE("subset cap aborts instead of sampling") {
    Graph big = path_graph(30);
    VertexFunc one = VertexFunc::constant(30, 1);
    CHECK_THROWS_AS(check_fractional_gf(big, one, one), ResourceError);
    CHECK_THROWS_AS(check_all_gf(big, one, one), ResourceError);

    Graph small = path_graph(5);
    VertexFunc sone = VertexFunc::constant(5, 1);
    CHECK_THROWS_AS(check_fractional_gf(small, sone, sone, CheckOptions{4, 1}), ResourceError);
    CHECK_NOTHROW(check_fractional_gf(small, sone, sone, CheckOptions{5, 1}));
}

TEST_CASE("checks validate their inputs") {
    Graph g = complete_graph(3);
    VertexFunc short_f = VertexFunc::constant(2, 1);
    VertexFunc one = VertexFunc::constant(3, 1);
    VertexFunc two = VertexFunc::constant(3, 2);
    CHECK_THROWS_AS(check_fractional_gf(g, one, short_f), UsageError);
    CHECK_THROWS_AS(check_fractional_gf(g, two, one), UsageError);
    Graph other = path_graph(4);
    CHECK_THROWS_AS(check_all_gf_excluding(g, EdgeSubset(other), one, one), UsageError);
    CHECK_THROWS_AS(scan_fractional_parallel(g, one, one, 0), UsageError);
}
