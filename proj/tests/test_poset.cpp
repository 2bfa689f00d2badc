#include <doctest.h>

#include <set>

#include "aperylab/census.hpp"
#include "aperylab/factorization.hpp"
#include "aperylab/poset.hpp"
#include "oracles.hpp"

using aperylab::Int;
using aperylab::NumericalSemigroup;

namespace {

using Edges = std::vector<std::pair<Int, Int>>;

Edges cover_values(const aperylab::AperyPoset& p) {
    Edges out;
    for (const auto& [i, j] : p.covers()) out.emplace_back(p.elements()[i], p.elements()[j]);
    return out;
}

std::size_t brute_width(const aperylab::AperyPoset& p) {
    return oracle::max_antichain(p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j) || p.leq(j, i); });
}

// All path lengths from 0 to each element, by exhaustive DFS over covers.
std::vector<std::set<Int>> path_lengths(const aperylab::AperyPoset& p) {
    std::vector<std::set<Int>> out(p.size());
    std::function<void(std::size_t, Int)> go = [&](std::size_t at, Int len) {
        out[at].insert(len);
        for (const auto& [i, j] : p.covers()) {
            if (i == at) go(j, len + 1);
        }
    };
    go(0, 0);
    return out;
}

}  // namespace

TEST_CASE("build_poset") {
    const auto p23 = aperylab::build_poset(NumericalSemigroup::from_generators({2, 3}));
    CHECK(p23.elements() == std::vector<Int>{0, 3});
    CHECK(cover_values(p23) == Edges{{0, 3}});

    const auto p569 = aperylab::build_poset(NumericalSemigroup::from_generators({5, 6, 9}));
    CHECK(cover_values(p569) == Edges{{0, 6}, {0, 9}, {6, 12}, {9, 18}, {12, 18}});
    CHECK(p569.leq(0, 4));
    CHECK_FALSE(p569.leq(2, 3));  // 12 - 9 = 3 is a gap

    const auto grid = aperylab::build_poset(NumericalSemigroup::from_generators({9, 12, 19}));
    CHECK(grid.size() == 9);
    CHECK(grid.covers().size() == 12);
    CHECK(aperylab::minimal_nonzero_elements(grid) == std::vector<Int>{12, 19});
}

TEST_CASE("gradedness") {
    CHECK(aperylab::is_graded(aperylab::build_poset(NumericalSemigroup::from_generators({9, 12, 19}))));
    CHECK_FALSE(aperylab::is_graded(aperylab::build_poset(NumericalSemigroup::from_generators({10, 14, 21}))));
    CHECK(aperylab::is_graded(aperylab::build_poset(NumericalSemigroup::from_generators({2, 3}))));
    CHECK_FALSE(aperylab::is_graded(aperylab::build_poset(NumericalSemigroup::from_generators({5, 6, 9}))));
}

TEST_CASE("width") {
    CHECK(aperylab::width(aperylab::build_poset(NumericalSemigroup::from_generators({2, 3}))) == 1);
    const auto grid = aperylab::build_poset(NumericalSemigroup::from_generators({9, 12, 19}));
    CHECK(aperylab::width(grid) == 3);
    CHECK(brute_width(grid) == 3);
    // {24, 31, 38} is an antichain
    CHECK_FALSE(grid.leq(3, 4));
    CHECK_FALSE(grid.leq(4, 5));
    CHECK_FALSE(grid.leq(3, 5));
    const auto p569 = aperylab::build_poset(NumericalSemigroup::from_generators({5, 6, 9}));
    CHECK(aperylab::width(p569) == 2);
    CHECK(brute_width(p569) == 2);
    CHECK(aperylab::width(aperylab::build_poset(NumericalSemigroup::from_generators({1}))) == 1);
}

TEST_CASE("DOT export") {
    const auto dot = aperylab::to_dot(aperylab::build_poset(NumericalSemigroup::from_generators({2, 3})));
    CHECK(dot.find("digraph apery {") == 0);
    CHECK(dot.find("n0 [label=\"0\"];") != std::string::npos);
    CHECK(dot.find("n3 [label=\"3\"];") != std::string::npos);
    CHECK(dot.find("n0 -> n3;") != std::string::npos);

    const auto grid = aperylab::to_dot(aperylab::build_poset(NumericalSemigroup::from_generators({9, 12, 19})));
    std::size_t edges = 0, nodes = 0;
    for (std::size_t at = grid.find("->"); at != std::string::npos; at = grid.find("->", at + 1)) ++edges;
    for (std::size_t at = grid.find("[label="); at != std::string::npos; at = grid.find("[label=", at + 1)) ++nodes;
    CHECK(edges == 12);
    CHECK(nodes == 9);
    CHECK(grid.find("{ rank=same; n24; n31; n38; }") != std::string::npos);

    const auto fig = aperylab::to_dot(aperylab::build_poset(NumericalSemigroup::from_generators({10, 14, 21})));
    CHECK(fig.find("n56 -> n77;") != std::string::npos);
    CHECK(fig.find("n63 -> n77;") != std::string::npos);
    CHECK(fig.find("n49 -> n77;") == std::string::npos);
    CHECK(fig == aperylab::to_dot(aperylab::build_poset(NumericalSemigroup::from_generators({21, 14, 10}))));
}

TEST_CASE("poset properties over every semigroup of genus <= 12") {
    aperylab::enumerate_by_genus(12, [](const NumericalSemigroup& s) {
        const auto p = aperylab::build_poset(s);
        REQUIRE(p.covers() == aperylab::transitive_reduction(p));
        REQUIRE(aperylab::is_graded(p) == aperylab::is_ahf(s));

        const auto minimal = aperylab::minimal_nonzero_elements(p);
        REQUIRE(minimal.size() == s.embedding_dimension() - 1);
        const auto w = aperylab::width(p);
        REQUIRE(w >= std::max<std::size_t>(minimal.size(), 1));
        if (p.size() <= 20) REQUIRE(w == brute_width(p));

        for (std::size_t i = 0; i < p.size(); ++i) {
            REQUIRE(p.leq(0, i));
            REQUIRE(p.leq(i, i));
        }
    });
}

TEST_CASE("cover paths correspond to factorization lengths") {
    aperylab::enumerate_by_genus(9, [](const NumericalSemigroup& s) {
        const auto p = aperylab::build_poset(s);
        const auto paths = path_lengths(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto ls = aperylab::length_set(s, p.elements()[i]);
            REQUIRE(std::vector<Int>(paths[i].begin(), paths[i].end()) == ls);
        }
    });
}
