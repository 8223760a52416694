#include "lexbetti/fuzz.hpp"

#include "lexbetti/errors.hpp"
#include "lexbetti/json_io.hpp"

namespace lexbetti {

namespace {

bool want(const std::string& only, const char* name) {
  return only.empty() || only == name;
}

std::string join_counts(const std::vector<Count>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

Monomial random_monomial(int vars, int degree, Rng& rng) {
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.range(1, vars)) - 1];
  return Monomial(std::move(e));
}

}  // namespace

MonomialSet random_borel_set(int max_vars, int max_degree, Rng& rng) {
  int vars = rng.range(2, max_vars);
  int degree = rng.range(1, max_degree);
  if (rng.chance(0.05)) return MonomialSet(vars, degree);  // keep the edge case hot
  int seeds = rng.range(1, 3);
  std::vector<Monomial> seed;
  seed.reserve(static_cast<std::size_t>(seeds));
  for (int k = 0; k < seeds; ++k) seed.push_back(random_monomial(vars, degree, rng));
  return borel_closure(seed);
}

std::optional<CheckFailure> check_borel_set_properties(const MonomialSet& borel,
                                                       Rng& rng, FuzzStats& stats,
                                                       const std::string& only) {
  const int n = borel.vars();
  const int d = borel.degree();
  auto fail = [&](const char* check, std::string detail) {
    return CheckFailure{check, std::move(detail), to_json(borel)};
  };

  if (want(only, "borel_construction")) {
    ++stats.checks;
    if (!is_borel(borel)) return fail("borel_construction", "set is not Borel");
  }

  MonomialSet seg = lex_segment(n, d, borel.size());
  MonomialSet grown = expand(borel);
  MonomialSet seg_grown = expand(seg);

  if (want(only, "expand_size")) {
    ++stats.checks;
    if (grown.size() != expand_size_borel(borel))
      return fail("expand_size",
                  "expansion has " + std::to_string(grown.size()) +
                      " monomials, census formula gives " +
                      std::to_string(expand_size_borel(borel)));
  }

  if (want(only, "min_growth_matches")) {
    ++stats.checks;
    if (expand_size_borel(seg) != min_growth(borel.size(), n))
      return fail("min_growth_matches",
                  "lex expansion size " + std::to_string(expand_size_borel(seg)) +
                      " vs closed form " + std::to_string(min_growth(borel.size(), n)));
  }

  if (want(only, "expand_size_monotone")) {
    ++stats.checks;
    if (expand_size_borel(seg) > expand_size_borel(borel))
      return fail("expand_size_monotone",
                  "lex segment expansion is larger: " +
                      std::to_string(expand_size_borel(seg)) + " > " +
                      std::to_string(expand_size_borel(borel)));
  }

  if (want(only, "decompose_roundtrip")) {
    ++stats.checks;
    if (recompose(decompose(borel)) != borel)
      return fail("decompose_roundtrip", "recompose(decompose(S)) != S");
  }

  if (d >= 1 && want(only, "expand_census")) {
    ++stats.checks;
    MaxIndexStats before = max_index_stats(borel);
    MaxIndexStats after = max_index_stats(grown);
    if (after.per_index != before.prefix)
      return fail("expand_census",
                  "expansion census " + join_counts(after.per_index) +
                      " differs from prefix counts " + join_counts(before.prefix));
  }

  if (!borel.empty() && d >= 1 && want(only, "min_expansion_membership")) {
    ++stats.checks;
    const Monomial& t = borel.min();
    MonomialSet rest_grown = expand(borel.without_min());
    for (int i = 1; i <= n; ++i) {
      bool member = rest_grown.contains(t.multiplied_by_var(i));
      bool predicted = i < t.max_index();
      if (member != predicted)
        return fail("min_expansion_membership",
                    "X" + std::to_string(i) + " * " + t.str() +
                        (member ? " unexpectedly present" : " unexpectedly missing"));
    }
  }

  if (!borel.empty() && want(only, "fold_min")) {
    ++stats.checks;
    Monomial folded_min = borel.min().fold_last_var();
    for (const Monomial& t : borel.elements())
      if (t.fold_last_var() < folded_min)
        return fail("fold_min", "fold of " + t.str() + " undercuts the folded min");
  }

  if (want(only, "slot_lexify")) {
    ++stats.checks;
    MonomialSet star = lexify_slots(borel);
    if (star.size() != borel.size())
      return fail("slot_lexify", "size changed under slot lexification");
    if (!is_borel(star))
      return fail("slot_lexify", "slot lexification left the Borel class");
    if (lexify_slots(star) != star)
      return fail("slot_lexify", "slot lexification is not idempotent");
    if (lexify_slots(seg) != seg)
      return fail("slot_lexify", "a lex segment moved under slot lexification");
    if (d >= 1 && !borel.empty() && n >= 2) {
      Count before = max_index_stats(borel).prefix[static_cast<std::size_t>(n) - 2];
      Count after = max_index_stats(star).prefix[static_cast<std::size_t>(n) - 2];
      if (before != after)
        return fail("slot_lexify", "m_{<=N-1} changed: " + std::to_string(before) +
                                       " -> " + std::to_string(after));
    }
  }

  if (d >= 1 && want(only, "lex_prefix_dominance")) {
    ++stats.checks;
    // Walk the lex segment and the Borel set in parallel; at every common
    // truncation size the segment's prefix counts must stay below. Truncating
    // a Borel set at its lex top keeps it Borel, so each step is an instance.
    std::vector<Count> seg_counts(static_cast<std::size_t>(n), 0);
    std::vector<Count> borel_counts(static_cast<std::size_t>(n), 0);
    std::vector<int> cur = lex_top(n, d).exponents();
    for (Count h = 1; h <= borel.size(); ++h) {
      ++seg_counts[static_cast<std::size_t>(Monomial(cur).max_index()) - 1];
      const Monomial& b = borel.elements()[static_cast<std::size_t>(h) - 1];
      ++borel_counts[static_cast<std::size_t>(b.max_index()) - 1];
      Count seg_prefix = 0, borel_prefix = 0;
      for (int i = 1; i <= n; ++i) {
        seg_prefix += seg_counts[static_cast<std::size_t>(i) - 1];
        borel_prefix += borel_counts[static_cast<std::size_t>(i) - 1];
        if (seg_prefix > borel_prefix)
          return fail("lex_prefix_dominance",
                      "at truncation " + std::to_string(h) + ", index " +
                          std::to_string(i) + ": lex " + std::to_string(seg_prefix) +
                          " > borel " + std::to_string(borel_prefix));
      }
      next_lex(cur);
    }
    // Spot checks through the public comparison on a few truncations.
    if (!borel.empty()) {
      for (int probe = 0; probe < 3; ++probe) {
        Count h = static_cast<Count>(rng.below(static_cast<std::uint64_t>(borel.size()))) + 1;
        std::vector<Monomial> top(borel.elements().begin(),
                                  borel.elements().begin() + h);
        if (!prefix_counts_dominated(lex_segment(n, d, h),
                                     MonomialSet::of(n, d, std::move(top))))
          return fail("lex_prefix_dominance",
                      "public comparison rejected truncation " + std::to_string(h));
      }
    }
  }

  if (d >= 1 && want(only, "betti_stat_comparison")) {
    ++stats.checks;
    for (int q = 0; q < n; ++q) {
      if (betti_stat(seg, q) < betti_stat(borel, q))
        return fail("betti_stat_comparison",
                    "q=" + std::to_string(q) + ": lex segment statistic " +
                        std::to_string(betti_stat(seg, q)) + " below borel " +
                        std::to_string(betti_stat(borel, q)));
      if (betti_stat(seg_grown, q) > betti_stat(grown, q))
        return fail("betti_stat_comparison",
                    "q=" + std::to_string(q) + ": expanded lex statistic " +
                        std::to_string(betti_stat(seg_grown, q)) + " above borel " +
                        std::to_string(betti_stat(grown, q)));
    }
  }

  if (d >= 1 && want(only, "betti_stat_closed_form")) {
    ++stats.checks;
    std::vector<Monomial> arbitrary;
    std::vector<int> cur = lex_top(n, d).exponents();
    do {
      if (rng.chance(0.35)) arbitrary.push_back(Monomial(cur));
    } while (next_lex(cur));
    MonomialSet loose = MonomialSet::of(n, d, std::move(arbitrary));
    for (int q = 0; q <= n; ++q) {
      if (betti_stat_closed(borel, q) != betti_stat(borel, q))
        return fail("betti_stat_closed_form",
                    "borel set, q=" + std::to_string(q));
      if (betti_stat_closed(loose, q) != betti_stat(loose, q))
        return fail("betti_stat_closed_form",
                    "arbitrary set, q=" + std::to_string(q));
    }
  }

  if (d >= 1 && want(only, "lex_prefix_closed_form")) {
    ++stats.checks;
    if (!seg.empty()) {
      MaxIndexStats st = max_index_stats(seg);
      for (int i = 1; i <= n; ++i)
        if (st.prefix[static_cast<std::size_t>(i) - 1] !=
            lex_prefix_count(seg.size(), n, i))
          return fail("lex_prefix_closed_form",
                      "i=" + std::to_string(i) + ": census " +
                          std::to_string(st.prefix[static_cast<std::size_t>(i) - 1]) +
                          " vs closed form " +
                          std::to_string(lex_prefix_count(seg.size(), n, i)));
    }
  }

  return std::nullopt;
}

std::optional<CheckFailure> check_ideal_properties(const MonomialIdeal& ideal,
                                                   int size_guard, FuzzStats& stats,
                                                   const std::string& only) {
  auto fail = [&](const char* check, std::string detail) {
    return CheckFailure{check, std::move(detail), to_json(ideal)};
  };
  Classification cls = classify(ideal);

  if (want(only, "classification_hierarchy")) {
    ++stats.checks;
    if (cls.is_lex && !cls.is_borel)
      return fail("classification_hierarchy", "lex but not Borel");
    if (cls.is_borel && !cls.is_stable)
      return fail("classification_hierarchy", "Borel but not stable");
  }

  if (want(only, "minimal_fixed_point")) {
    ++stats.checks;
    if (MonomialIdeal::minimalize(ideal.generators(), ideal.vars()) != ideal)
      return fail("minimal_fixed_point", "minimalization changed the generators");
  }

  BettiTable ek;
  bool have_ek = cls.is_stable;
  if (have_ek) ek = ek_betti(ideal);

  if (have_ek && want(only, "slicewise_betti")) {
    ++stats.checks;
    BettiTable sliced = betti_by_degree(ideal);
    if (sliced != ek)
      return fail("slicewise_betti",
                  "slicewise " + join_counts(sliced.betas) +
                      " vs generatorwise " + join_counts(ek.betas));
  }

  bool within_guard = ideal.generator_count() <= size_guard;
  BettiTable oracle;
  if (within_guard) oracle = taylor_betti(ideal, size_guard);

  if (have_ek && within_guard && want(only, "taylor_agreement")) {
    ++stats.checks;
    if (oracle.betas != ek.betas)
      return fail("taylor_agreement", "taylor " + join_counts(oracle.betas) +
                                          " vs formula " + join_counts(ek.betas));
  }

  HilbertFunction h = hilbert_stabilized(ideal);
  MonomialIdeal lexi = lex_ideal(h);

  if (want(only, "hilbert_roundtrip")) {
    ++stats.checks;
    if (hilbert(lexi, h.max_degree()) != h)
      return fail("hilbert_roundtrip", "lex ideal changed the Hilbert data");
    if (!classify(lexi).is_lex)
      return fail("hilbert_roundtrip", "constructed ideal is not lex");
  }

  BettiTable closed = closed_form_betti(h);

  if (want(only, "closed_form_on_lex")) {
    ++stats.checks;
    BettiTable lex_ek = ek_betti(lexi);
    if (closed != lex_ek)
      return fail("closed_form_on_lex",
                  "closed form " + join_counts(closed.betas) +
                      " vs generatorwise lex table " + join_counts(lex_ek.betas));
  }

  if (ideal.vars() >= 2 && want(only, "beta1_formula")) {
    ++stats.checks;
    if (beta1_closed_form(h) != closed.betas[1])
      return fail("beta1_formula",
                  "direct first-syzygy form " + std::to_string(beta1_closed_form(h)) +
                      " vs table entry " + std::to_string(closed.betas[1]));
  }

  if (want(only, "lex_bound_domination")) {
    ++stats.checks;
    if (have_ek && !dominates(closed, ek))
      return fail("lex_bound_domination",
                  "bound " + join_counts(closed.betas) + " fails to dominate " +
                      join_counts(ek.betas));
    if (within_guard && !dominates(closed, oracle))
      return fail("lex_bound_domination",
                  "bound " + join_counts(closed.betas) +
                      " fails to dominate the Taylor table " +
                      join_counts(oracle.betas));
  }

  return std::nullopt;
}

MonomialSet shrink_set(MonomialSet failing, const std::string& check,
                       std::uint64_t seed, FuzzStats& stats) {
  while (failing.size() > 1) {
    MonomialSet candidate = failing.without_min();  // stays Borel
    Rng rng(Rng::derive(seed, 0x5e7));
    if (!check_borel_set_properties(candidate, rng, stats, check)) break;
    failing = std::move(candidate);
  }
  return failing;
}

MonomialIdeal shrink_ideal(MonomialIdeal failing, const std::string& check,
                           int size_guard, FuzzStats& stats) {
  bool shrunk = true;
  while (shrunk && failing.generator_count() > 1) {
    shrunk = false;
    for (std::size_t k = 0; k < failing.generators().size(); ++k) {
      std::vector<Monomial> rest = failing.generators();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      MonomialIdeal candidate = MonomialIdeal::minimalize(std::move(rest), failing.vars());
      if (check_ideal_properties(candidate, size_guard, stats, check)) {
        failing = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return failing;
}

std::optional<CheckFailure> run_fuzz_case(std::uint64_t case_seed, int max_vars,
                                          int max_degree, int size_guard,
                                          FuzzStats& stats) {
  ++stats.cases;
  Rng rng(Rng::derive(case_seed, 1));
  MonomialSet borel = random_borel_set(max_vars, max_degree, rng);
  if (auto failure = check_borel_set_properties(borel, rng, stats)) {
    MonomialSet small = shrink_set(borel, failure->check, case_seed, stats);
    failure->reproducer = to_json(small);
    return failure;
  }

  Rng ideal_rng(Rng::derive(case_seed, 2));
  int vars = ideal_rng.range(2, max_vars);
  int top = ideal_rng.range(1, max_degree);
  double density = 0.02 + 0.28 * static_cast<double>(ideal_rng.below(1024)) / 1024.0;
  MonomialIdeal ideal =
      random_borel_ideal(vars, top, Rng::derive(case_seed, 3), density);
  ++stats.checks;
  if (!classify(ideal).is_borel)
    return CheckFailure{"borel_ideal_construction",
                        "random Borel ideal is not Borel", to_json(ideal)};
  if (auto failure = check_ideal_properties(ideal, size_guard, stats)) {
    MonomialIdeal small = shrink_ideal(ideal, failure->check, size_guard, stats);
    failure->reproducer = to_json(small);
    return failure;
  }
  return std::nullopt;
}

}  // namespace lexbetti
