#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lexbetti/errors.hpp"
#include "lexbetti/macaulay.hpp"
#include "lexbetti/monoset.hpp"
#include "lexbetti/oracle.hpp"

using namespace lexbetti;

namespace {

MonomialSet mk(int vars, int degree, std::vector<std::vector<int>> exps) {
    std::vector<Monomial> elems;
    for (auto& e : exps) elems.emplace_back(e);
    return MonomialSet::of(vars, degree, std::move(elems));
}

// Independent Borel test through the slot decomposition: a set is Borel iff
// every slot is Borel one variable down and each slot's expansion lands in
// the slot below it (those are exactly the moves with j < vars and j == vars).
bool borel_via_slots(const MonomialSet& s) {
    if (s.vars() == 1) return true;
    auto slots = decompose(s);
    for (std::size_t d = 0; d < slots.size(); ++d) {
        if (!borel_via_slots(slots[d])) return false;
        if (d == 0) continue;
        MonomialSet grown = expand(slots[d]);
        for (const Monomial& t : grown.elements())
            if (!slots[d - 1].contains(t)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("canonical construction") {
    MonomialSet s = mk(3, 2, {{0, 2, 0}, {1, 1, 0}, {2, 0, 0}, {1, 1, 0}});
    CHECK(s.size() == 3);
    CHECK(s.elements()[0] == Monomial({2, 0, 0}));
    CHECK(s.elements()[1] == Monomial({1, 1, 0}));
    CHECK(s.elements()[2] == Monomial({0, 2, 0}));
    CHECK(s.min() == Monomial({0, 2, 0}));
    CHECK(s.contains(Monomial({1, 1, 0})));
    CHECK_FALSE(s.contains(Monomial({1, 0, 1})));
    CHECK(s.without_min().size() == 2);

    CHECK_THROWS_AS(mk(3, 2, {{1, 0, 0}}), InputError);     // wrong degree
    CHECK_THROWS_AS(mk(2, 2, {{1, 1, 0}}), InputError);     // wrong vars
    CHECK_THROWS_AS(MonomialSet(0, 1), InputError);
    CHECK_THROWS_AS(MonomialSet(2, -1), InputError);
    CHECK_THROWS_AS(MonomialSet(2, 1).min(), PreconditionError);
}

TEST_CASE("ambient sizes") {
    CHECK(ambient_size(3, 2) == 6);
    CHECK(ambient_size(4, 3) == 20);
    CHECK(ambient_size(1, 5) == 1);
    CHECK(ambient_size(3, 0) == 1);
    CHECK(ambient_size(2, 3) == 4);
}

TEST_CASE("descending lex walk covers a whole degree in order") {
    std::vector<Monomial> seen;
    std::vector<int> e = lex_top(3, 2).exponents();
    do {
        seen.emplace_back(e);
    } while (next_lex(e));

    std::vector<Monomial> expected = {
        Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({1, 0, 1}),
        Monomial({0, 2, 0}), Monomial({0, 1, 1}), Monomial({0, 0, 2}),
    };
    CHECK(seen == expected);
    // the walk stops exactly at the lex-smallest monomial
    CHECK(e == std::vector<int>{0, 0, 2});
}

TEST_CASE("lex segments") {
    MonomialSet seg = lex_segment(3, 2, 3);
    CHECK(seg == mk(3, 2, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
    CHECK(is_lex_segment(seg));
    CHECK(is_borel(seg));
    CHECK(lex_segment(3, 2, 0).empty());
    CHECK(lex_segment(3, 2, 6).size() == 6);
    CHECK_THROWS_AS(lex_segment(3, 2, 7), PreconditionError);

    CHECK_FALSE(is_lex_segment(mk(3, 2, {{2, 0, 0}, {1, 0, 1}})));
    CHECK(is_lex_segment(MonomialSet(3, 2)));
}

TEST_CASE("borel membership test") {
    CHECK(is_borel(mk(3, 2, {{2, 0, 0}, {1, 1, 0}})));
    CHECK_FALSE(is_borel(mk(3, 2, {{1, 1, 0}})));
    CHECK_FALSE(is_borel(mk(3, 2, {{0, 2, 0}})));
    CHECK(is_borel(MonomialSet(3, 2)));
    CHECK(is_borel(mk(3, 0, {{0, 0, 0}})));
    // lex segments are always Borel
    for (Count h = 0; h <= ambient_size(3, 3); ++h)
        CHECK(is_borel(lex_segment(3, 3, h)));
}

TEST_CASE("is_borel agrees with the slot characterization on every subset") {
    for (int degree = 1; degree <= 3; ++degree) {
        const auto ambient = lex_segment(3, degree, ambient_size(3, degree)).elements();
        const int n = static_cast<int>(ambient.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Monomial> elems;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) elems.push_back(ambient[b]);
            MonomialSet s = MonomialSet::of(3, degree, std::move(elems));
            CHECK(is_borel(s) == borel_via_slots(s));
        }
    }
}

TEST_CASE("expansion") {
    CHECK(expand(mk(3, 2, {{1, 1, 0}})) ==
          mk(3, 3, {{2, 1, 0}, {1, 2, 0}, {1, 1, 1}}));
    CHECK(expand(MonomialSet(3, 2)).empty());
    CHECK(expand(mk(3, 0, {{0, 0, 0}})) == mk(3, 1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    // expansion preserves Borel sets and lex segments
    for (const MonomialSet& b : enumerate_borel_sets(3, 2)) {
        CHECK(is_borel(expand(b)));
        CHECK(expand_size_borel(b) == expand(b).size());
    }
    for (Count h = 0; h <= 6; ++h)
        CHECK(is_lex_segment(expand(lex_segment(3, 2, h))));
}

TEST_CASE("expand_size_borel on a frozen example") {
    MonomialSet b = mk(3, 2, {{2, 0, 0}, {1, 1, 0}});
    CHECK(expand_size_borel(b) == 5);  // (3-1+1) + (3-2+1)
    CHECK(expand(b).size() == 5);
    CHECK(expand_size_borel(mk(3, 0, {{0, 0, 0}})) == 3);
}

TEST_CASE("decompose and recompose") {
    MonomialSet s = lex_segment(3, 2, 4);
    auto slots = decompose(s);
    REQUIRE(slots.size() == 3);
    CHECK(slots[0] == mk(2, 2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(slots[1] == mk(2, 1, {{1, 0}}));
    CHECK(slots[2].empty());
    CHECK(recompose(slots) == s);

    CHECK_THROWS_AS(decompose(mk(1, 2, {{2}})), PreconditionError);

    for (const MonomialSet& b : enumerate_borel_sets(3, 3))
        CHECK(recompose(decompose(b)) == b);
}

TEST_CASE("lexify_slots straightens one slot at a time") {
    MonomialSet star = mk(3, 2, {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}});
    MonomialSet out = lexify_slots(star);
    CHECK(out == mk(3, 2, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
    CHECK(out.size() == star.size());

    for (const MonomialSet& b : enumerate_borel_sets(3, 3)) {
        MonomialSet l = lexify_slots(b);
        CHECK(l.size() == b.size());
        CHECK(is_borel(l));
        CHECK(lexify_slots(l) == l);  // idempotent
    }
    // lex segments are fixed points
    CHECK(lexify_slots(lex_segment(3, 3, 7)) == lex_segment(3, 3, 7));
}

TEST_CASE("max index census") {
    auto stats = max_index_stats(mk(3, 2, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
    CHECK(stats.per_index == std::vector<Count>{1, 2, 0});
    CHECK(stats.prefix == std::vector<Count>{1, 3, 3});
    CHECK_THROWS_AS(max_index_stats(mk(3, 0, {{0, 0, 0}})), PreconditionError);

    // census identity: the expansion of a Borel set has per-index counts
    // equal to the prefix counts of the set (canonical factorization X_i * T
    // with i >= m(T))
    for (const MonomialSet& b : enumerate_borel_sets(3, 2)) {
        if (b.empty()) continue;
        auto inner = max_index_stats(b);
        auto outer = max_index_stats(expand(b));
        CHECK(outer.per_index == inner.prefix);
    }
}

TEST_CASE("betti statistics") {
    MonomialSet seg = lex_segment(3, 2, 3);
    CHECK(betti_stat(seg, 0) == 3);
    CHECK(betti_stat(seg, 1) == 3);  // C(0,1)+C(1,1)+C(2,1)
    CHECK(betti_stat(seg, 2) == 1);
    MonomialSet b = mk(3, 2, {{2, 0, 0}, {1, 1, 0}});
    CHECK(betti_stat(b, 0) == 2);
    CHECK(betti_stat(b, 1) == 1);
    CHECK(betti_stat(b, 2) == 0);

    // the closed form agrees on arbitrary sets, Borel or not
    for (int degree = 1; degree <= 3; ++degree) {
        const auto ambient = lex_segment(3, degree, ambient_size(3, degree)).elements();
        const int n = static_cast<int>(ambient.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Monomial> elems;
            for (int bit = 0; bit < n; ++bit)
                if (mask & (1u << bit)) elems.push_back(ambient[bit]);
            MonomialSet s = MonomialSet::of(3, degree, std::move(elems));
            for (int q = 0; q <= 3; ++q)
                CHECK(betti_stat(s, q) == betti_stat_closed(s, q));
        }
    }
}

TEST_CASE("prefix count domination input checking") {
    MonomialSet seg = lex_segment(3, 2, 2);
    MonomialSet b = mk(3, 2, {{2, 0, 0}, {1, 1, 0}});
    CHECK(prefix_counts_dominated(seg, b));

    CHECK_THROWS_AS(prefix_counts_dominated(lex_segment(3, 2, 3), b), PreconditionError);
    MonomialSet gap = mk(3, 2, {{2, 0, 0}, {1, 0, 1}});  // skips X1*X2
    CHECK_THROWS_AS(prefix_counts_dominated(gap, b), PreconditionError);
    CHECK_THROWS_AS(
        prefix_counts_dominated(lex_segment(3, 2, 1), mk(3, 2, {{0, 2, 0}})),
        PreconditionError);  // right not Borel
}

TEST_CASE("borel closure") {
    MonomialSet c = borel_closure({Monomial({0, 2, 0})});
    CHECK(c == mk(3, 2, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
    CHECK(is_borel(c));
    CHECK(borel_closure({Monomial({0, 0, 3})}).size() == ambient_size(3, 3));
    CHECK(borel_closure({Monomial({3, 0, 0})}).size() == 1);

    CHECK_THROWS_AS(borel_closure({}), InputError);
    CHECK_THROWS_AS(borel_closure({Monomial({1, 0}), Monomial({2, 0})}), InputError);

    // closure is a fixed point exactly on Borel sets
    for (const MonomialSet& b : enumerate_borel_sets(3, 2)) {
        if (b.empty()) continue;
        CHECK(borel_closure(b.elements()) == b);
    }
}
