#include "lexbetti/ideal.hpp"

#include <algorithm>

#include "lexbetti/errors.hpp"

namespace lexbetti {

namespace {

// Canonical generator order: degree ascending, lex descending inside a degree.
bool generator_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a > b;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int vars) {
  if (vars < 1) throw InputError("ideal needs at least one variable");
  return MonomialIdeal(vars);
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> generators, int vars) {
  MonomialIdeal ideal = zero(vars);
  for (const Monomial& g : generators) {
    if (g.vars() != vars)
      throw InputError("generator " + g.str() + " has the wrong variable count");
    if (g.degree() == 0)
      throw InputError("generator of degree zero (the unit ideal is excluded)");
  }
  std::sort(generators.begin(), generators.end(), generator_less);
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : ideal.gens_)
      if (kept.divides(g)) { redundant = true; break; }
    if (!redundant) ideal.gens_.push_back(g);
  }
  return ideal;
}

int MonomialIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.vars() != vars_)
    throw PreconditionError("membership test: variable count mismatch");
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialSet graded_basis(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) throw PreconditionError("graded basis at a negative degree");
  MonomialSet cur(ideal.vars(), 0);
  for (int d = 1; d <= degree; ++d) {
    std::vector<Monomial> next = expand(cur).elements();
    for (const Monomial& g : ideal.generators())
      if (g.degree() == d) next.push_back(g);
    cur = MonomialSet::of(ideal.vars(), d, std::move(next));
  }
  return cur;
}

HilbertFunction hilbert(const MonomialIdeal& ideal, int max_degree) {
  if (max_degree < 0) throw PreconditionError("negative maximal degree");
  HilbertFunction h;
  h.vars = ideal.vars();
  h.values.reserve(static_cast<std::size_t>(max_degree) + 1);
  MonomialSet cur(ideal.vars(), 0);
  h.values.push_back(0);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> next = expand(cur).elements();
    for (const Monomial& g : ideal.generators())
      if (g.degree() == d) next.push_back(g);
    cur = MonomialSet::of(ideal.vars(), d, std::move(next));
    h.values.push_back(cur.size());
  }
  return h;
}

HilbertFunction hilbert_stabilized(const MonomialIdeal& ideal, int cap) {
  int base = ideal.max_generator_degree();
  if (ideal.is_zero()) return hilbert(ideal, 0);
  HilbertFunction h;
  h.vars = ideal.vars();
  h.values.push_back(0);
  MonomialSet cur(ideal.vars(), 0);
  for (int d = 1; d <= base + cap; ++d) {
    std::vector<Monomial> next = expand(cur).elements();
    for (const Monomial& g : ideal.generators())
      if (g.degree() == d) next.push_back(g);
    cur = MonomialSet::of(ideal.vars(), d, std::move(next));
    Count prev = h.values.back();
    h.values.push_back(cur.size());
    if (d > base) {
      Count floor = h.vars >= 2 ? min_growth(prev, h.vars) : (prev > 0 ? 1 : 0);
      if (cur.size() == floor) return h;
    }
  }
  throw PreconditionError("Hilbert data did not stabilize within " +
                          std::to_string(cap) + " degrees past the generators");
}

Classification classify(const MonomialIdeal& ideal) {
  Classification c;
  c.is_stable = true;
  c.is_borel = true;
  for (const Monomial& t : ideal.generators()) {
    int m = t.max_index();
    for (int i = 1; i < m && c.is_stable; ++i)
      if (!ideal.contains(t.elementary_move(i, m))) c.is_stable = false;
    for (int j = 2; j <= ideal.vars() && c.is_borel; ++j) {
      if (t.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i)
        if (!ideal.contains(t.elementary_move(i, j))) { c.is_borel = false; break; }
    }
  }
  // Lex segments in every degree up to the top generator degree; expansion
  // preserves lex segments, so higher degrees follow for free.
  c.is_lex = true;
  MonomialSet cur(ideal.vars(), 0);
  for (int d = 1; d <= ideal.max_generator_degree() && c.is_lex; ++d) {
    std::vector<Monomial> next = expand(cur).elements();
    for (const Monomial& g : ideal.generators())
      if (g.degree() == d) next.push_back(g);
    cur = MonomialSet::of(ideal.vars(), d, std::move(next));
    if (!is_lex_segment(cur)) c.is_lex = false;
  }
  return c;
}

namespace {

void require_stable(const MonomialIdeal& ideal, const char* who) {
  if (!classify(ideal).is_stable)
    throw PreconditionError(std::string(who) + " requires a stable ideal");
}

}  // namespace

BettiTable ek_betti(const MonomialIdeal& ideal) {
  require_stable(ideal, "the Eliahou-Kervaire formula");
  BettiTable t;
  t.vars = ideal.vars();
  t.betas.assign(static_cast<std::size_t>(ideal.vars()), 0);
  for (const Monomial& g : ideal.generators()) {
    std::vector<Count>& row = t.by_degree[g.degree()];
    if (row.empty()) row.assign(static_cast<std::size_t>(ideal.vars()), 0);
    int m = g.max_index();
    for (int q = 0; q < ideal.vars(); ++q) {
      Count term = to_count(binom_ext(m - 1, q));
      row[static_cast<std::size_t>(q)] += term;
      t.betas[static_cast<std::size_t>(q)] += term;
    }
  }
  return t;
}

BettiTable betti_by_degree(const MonomialIdeal& ideal) {
  require_stable(ideal, "the slicewise Betti computation");
  BettiTable t;
  t.vars = ideal.vars();
  t.betas.assign(static_cast<std::size_t>(ideal.vars()), 0);
  MonomialSet cur(ideal.vars(), 0);
  for (int d = 1; d <= ideal.max_generator_degree(); ++d) {
    MonomialSet grown = expand(cur);
    std::vector<Monomial> next = grown.elements();
    for (const Monomial& g : ideal.generators())
      if (g.degree() == d) next.push_back(g);
    cur = MonomialSet::of(ideal.vars(), d, std::move(next));
    if (cur.size() == grown.size()) continue;  // no new generators here
    std::vector<Count> row(static_cast<std::size_t>(ideal.vars()), 0);
    for (int q = 0; q < ideal.vars(); ++q) {
      row[static_cast<std::size_t>(q)] =
          betti_stat(cur, q) - betti_stat(grown, q);
      t.betas[static_cast<std::size_t>(q)] += row[static_cast<std::size_t>(q)];
    }
    t.by_degree[d] = std::move(row);
  }
  return t;
}

MonomialIdeal lex_ideal(const HilbertFunction& h) {
  AdmissibilityReport adm = is_admissible(h);
  if (!adm.ok)
    throw PreconditionError("Hilbert data not admissible at degree " +
                            std::to_string(*adm.first_violation) + ": " + adm.reason);
  std::vector<Monomial> gens;
  MonomialSet prev(h.vars, 0);
  for (int d = 1; d <= h.max_degree(); ++d) {
    MonomialSet cur = lex_segment(h.vars, d, h.at(d));
    MonomialSet grown = expand(prev);
    for (const Monomial& t : cur.elements())
      if (!grown.contains(t)) gens.push_back(t);
    prev = cur;
  }
  return MonomialIdeal::minimalize(std::move(gens), h.vars);
}

namespace {

GeneratorProfile stabilized_profile(const HilbertFunction& h, const char* who) {
  GeneratorProfile p = generator_degrees(h);
  if (!p.stabilized)
    throw PreconditionError(std::string(who) +
                            ": Hilbert data still acquires generators at its last "
                            "degree; extend the data until the tail stabilizes");
  return p;
}

}  // namespace

BettiTable closed_form_betti(const HilbertFunction& h) {
  GeneratorProfile profile = stabilized_profile(h, "closed-form Betti bound");
  int n = h.vars;
  BettiTable t;
  t.vars = n;
  t.betas.assign(static_cast<std::size_t>(n), 0);
  int top = profile.max_degree;
  if (top == 0) return t;  // zero ideal

  // prefix[d][i-1] = m_{<=i} of the lex segment of size h(d).
  std::vector<std::vector<Count>> prefix(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    prefix[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      prefix[static_cast<std::size_t>(d)][static_cast<std::size_t>(i) - 1] =
          lex_prefix_count(h.at(d), n, i);
  }
  auto mle = [&](int d, int i) {
    return BigInt(prefix[static_cast<std::size_t>(d)][static_cast<std::size_t>(i) - 1]);
  };

  // Totals: the top slice contributes through its own census, every lower
  // slice through the census of its expansion.
  for (int q = 0; q < n; ++q) {
    BigInt v = binom_ext(n - 1, q) * BigInt(h.at(top));
    for (int i = 1; i <= n - 1; ++i) v -= mle(top, i) * binom_ext(i - 1, q - 1);
    for (int d = 1; d <= top - 1; ++d)
      for (int i = 1; i <= n - 1; ++i) v -= mle(d, i) * binom_ext(i, q);
    t.betas[static_cast<std::size_t>(q)] = to_count(v);
  }

  // Split: in degree d the new generators contribute the betti statistic of
  // the full slice minus that of the expanded previous slice.
  for (const auto& [d, cnt] : profile.new_generators) {
    std::vector<Count> row(static_cast<std::size_t>(n), 0);
    for (int q = 0; q < n; ++q) {
      BigInt slice = binom_ext(n - 1, q) * BigInt(h.at(d));
      for (int i = 1; i <= n - 1; ++i) slice -= mle(d, i) * binom_ext(i - 1, q - 1);
      BigInt grown = 0;
      for (int i = 1; i <= n; ++i) grown += mle(d - 1, i) * binom_ext(i - 1, q);
      row[static_cast<std::size_t>(q)] = to_count(slice - grown);
    }
    t.by_degree[d] = std::move(row);
  }
  return t;
}

Count beta1_closed_form(const HilbertFunction& h) {
  GeneratorProfile profile = stabilized_profile(h, "first-syzygy closed form");
  if (h.vars == 1) return 0;
  int top = profile.max_degree;
  if (top == 0) return 0;
  auto low = [&](int d, long long base_shift) {
    return MacaulayExpansion::of(h.at(d), h.vars - 1).shifted(0, base_shift);
  };
  BigInt v = BigInt(h.vars - 1) * BigInt(h.at(top)) - low(top, -1);
  for (int d = 1; d <= top - 1; ++d)
    v -= BigInt(h.vars - 1) * low(d, -1) - low(d, -2);
  return to_count(v);
}

bool dominates(const BettiTable& upper, const BettiTable& lower) {
  if (upper.vars != lower.vars)
    throw PreconditionError("Betti comparison: variable count mismatch");
  for (std::size_t q = 0; q < upper.betas.size(); ++q)
    if (upper.betas[q] < lower.betas[q]) return false;
  return true;
}

BettiTable bound_for(const MonomialIdeal& ideal, int max_degree) {
  HilbertFunction h = max_degree < 0 ? hilbert_stabilized(ideal)
                                     : hilbert(ideal, max_degree);
  return closed_form_betti(h);
}

}  // namespace lexbetti
