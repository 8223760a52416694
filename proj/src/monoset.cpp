#include "lexbetti/monoset.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lexbetti/errors.hpp"
#include "lexbetti/macaulay.hpp"

namespace lexbetti {

MonomialSet::MonomialSet(int vars, int degree) : vars_(vars), degree_(degree) {
  if (vars < 1) throw InputError("set needs at least one variable");
  if (degree < 0) throw InputError("negative degree");
}

MonomialSet MonomialSet::of(int vars, int degree, std::vector<Monomial> elements) {
  MonomialSet s(vars, degree);
  for (const Monomial& m : elements) {
    if (m.vars() != vars)
      throw InputError("set element has " + std::to_string(m.vars()) +
                       " variables, ambient has " + std::to_string(vars));
    if (m.degree() != degree)
      throw InputError("set element " + m.str() + " has degree " +
                       std::to_string(m.degree()) + ", ambient degree is " +
                       std::to_string(degree));
  }
  std::sort(elements.begin(), elements.end(), std::greater<>());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  s.elems_ = std::move(elements);
  return s;
}

const Monomial& MonomialSet::min() const {
  if (empty()) throw PreconditionError("min of an empty set");
  return elems_.back();
}

bool MonomialSet::contains(const Monomial& m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m, std::greater<>());
  return it != elems_.end() && *it == m;
}

MonomialSet MonomialSet::without_min() const {
  if (empty()) throw PreconditionError("cannot remove from an empty set");
  MonomialSet s(vars_, degree_);
  s.elems_.assign(elems_.begin(), elems_.end() - 1);
  return s;
}

Count ambient_size(int vars, int degree) {
  if (vars < 1 || degree < 0) throw PreconditionError("bad ambient data");
  return to_count(binom_ext(vars + degree - 1, vars - 1));
}

Monomial lex_top(int vars, int degree) {
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  e[0] = degree;
  return Monomial(std::move(e));
}

bool next_lex(std::vector<int>& exponents) {
  int n = static_cast<int>(exponents.size());
  // Find the last position before the final variable that still carries
  // mass; everything to its right collapses onto the next position.
  int j = -1;
  for (int k = n - 2; k >= 0; --k)
    if (exponents[k] > 0) { j = k; break; }
  if (j < 0) return false;
  int tail = 0;
  for (int k = j + 1; k < n; ++k) tail += exponents[k];
  --exponents[j];
  exponents[j + 1] = tail + 1;
  for (int k = j + 2; k < n; ++k) exponents[k] = 0;
  return true;
}

bool is_borel(const MonomialSet& s) {
  for (const Monomial& t : s.elements())
    for (int j = 2; j <= s.vars(); ++j) {
      if (t.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i)
        if (!s.contains(t.elementary_move(i, j))) return false;
    }
  return true;
}

bool is_lex_segment(const MonomialSet& s) {
  if (s.empty()) return true;
  std::vector<int> cur = lex_top(s.vars(), s.degree()).exponents();
  for (const Monomial& t : s.elements()) {
    if (t.exponents() != cur) return false;
    next_lex(cur);
  }
  return true;
}

MonomialSet lex_segment(int vars, int degree, Count size) {
  if (size < 0 || size > ambient_size(vars, degree))
    throw PreconditionError("lex segment size " + std::to_string(size) +
                            " exceeds the ambient count");
  MonomialSet s(vars, degree);
  std::vector<Monomial> elems;
  elems.reserve(static_cast<std::size_t>(size));
  std::vector<int> cur = lex_top(vars, degree).exponents();
  for (Count k = 0; k < size; ++k) {
    elems.push_back(Monomial(cur));
    next_lex(cur);
  }
  return MonomialSet::of(vars, degree, std::move(elems));
}

MonomialSet expand(const MonomialSet& s) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(s.size()) * s.vars());
  for (const Monomial& t : s.elements())
    for (int i = 1; i <= s.vars(); ++i) out.push_back(t.multiplied_by_var(i));
  return MonomialSet::of(s.vars(), s.degree() + 1, std::move(out));
}

Count expand_size_borel(const MonomialSet& s) {
  if (s.degree() == 0) return s.size() * s.vars();
  // Disjoint decomposition of the expansion of a Borel set: the products
  // X_i * T with m(T) <= i are pairwise distinct and cover everything, so
  // each T accounts for vars - m(T) + 1 new monomials.
  Count total = 0;
  for (const Monomial& t : s.elements())
    total += s.vars() - t.max_index() + 1;
  return total;
}

std::vector<MonomialSet> decompose(const MonomialSet& s) {
  if (s.vars() < 2) throw PreconditionError("decompose needs at least two variables");
  int d = s.degree();
  std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(d) + 1);
  for (const Monomial& t : s.elements()) {
    int last = t.exponent(s.vars());
    std::vector<int> head(t.exponents().begin(), t.exponents().end() - 1);
    buckets[static_cast<std::size_t>(last)].push_back(Monomial(std::move(head)));
  }
  std::vector<MonomialSet> slots;
  slots.reserve(buckets.size());
  for (int k = 0; k <= d; ++k)
    slots.push_back(MonomialSet::of(s.vars() - 1, d - k,
                                    std::move(buckets[static_cast<std::size_t>(k)])));
  return slots;
}

MonomialSet recompose(const std::vector<MonomialSet>& slots) {
  if (slots.empty()) throw PreconditionError("recompose needs at least one slot");
  int d = static_cast<int>(slots.size()) - 1;
  int inner_vars = slots[0].vars();
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    const MonomialSet& slot = slots[static_cast<std::size_t>(k)];
    if (slot.vars() != inner_vars)
      throw PreconditionError("recompose: inconsistent slot variable counts");
    if (slot.degree() != d - k)
      throw PreconditionError("recompose: slot " + std::to_string(k) +
                              " has degree " + std::to_string(slot.degree()) +
                              ", expected " + std::to_string(d - k));
    for (const Monomial& t : slot.elements()) {
      std::vector<int> e = t.exponents();
      e.push_back(k);
      out.push_back(Monomial(std::move(e)));
    }
  }
  return MonomialSet::of(inner_vars + 1, d, std::move(out));
}

MonomialSet lexify_slots(const MonomialSet& s) {
  if (s.vars() == 1) return s;  // both possible sets per degree are already lex
  std::vector<MonomialSet> slots = decompose(s);
  for (MonomialSet& slot : slots)
    slot = lex_segment(slot.vars(), slot.degree(), slot.size());
  return recompose(slots);
}

MaxIndexStats max_index_stats(const MonomialSet& s) {
  if (s.degree() == 0)
    throw PreconditionError("max index census needs positive degree");
  MaxIndexStats stats;
  stats.per_index.assign(static_cast<std::size_t>(s.vars()), 0);
  for (const Monomial& t : s.elements())
    ++stats.per_index[static_cast<std::size_t>(t.max_index()) - 1];
  stats.prefix = stats.per_index;
  for (std::size_t i = 1; i < stats.prefix.size(); ++i)
    stats.prefix[i] += stats.prefix[i - 1];
  return stats;
}

Count betti_stat(const MonomialSet& s, int q) {
  if (q < 0) throw PreconditionError("betti statistic needs q >= 0");
  if (s.degree() == 0)
    throw PreconditionError("betti statistic needs positive degree");
  BigInt total = 0;
  for (const Monomial& t : s.elements())
    total += binom_ext(t.max_index() - 1, q);
  return to_count(total);
}

Count betti_stat_closed(const MonomialSet& s, int q) {
  if (q < 0) throw PreconditionError("betti statistic needs q >= 0");
  if (s.degree() == 0)
    throw PreconditionError("betti statistic needs positive degree");
  if (s.empty()) return 0;
  MaxIndexStats stats = max_index_stats(s);
  BigInt total = binom_ext(s.vars() - 1, q) * BigInt(s.size());
  for (int i = 1; i < s.vars(); ++i)
    total -= BigInt(stats.prefix[static_cast<std::size_t>(i) - 1]) *
             binom_ext(i - 1, q - 1);
  return to_count(total);
}

bool prefix_counts_dominated(const MonomialSet& lex, const MonomialSet& borel) {
  if (lex.vars() != borel.vars() || lex.degree() != borel.degree())
    throw PreconditionError("prefix comparison: ambient mismatch");
  if (lex.size() != borel.size())
    throw PreconditionError("prefix comparison: sizes differ");
  if (lex.degree() == 0)
    throw PreconditionError("prefix comparison needs positive degree");
  if (!is_lex_segment(lex))
    throw PreconditionError("left-hand set is not a lex segment");
  if (!is_borel(borel))
    throw PreconditionError("right-hand set is not Borel");
  MaxIndexStats a = max_index_stats(lex);
  MaxIndexStats b = max_index_stats(borel);
  for (std::size_t i = 0; i < a.prefix.size(); ++i)
    if (a.prefix[i] > b.prefix[i]) return false;
  return true;
}

MonomialSet borel_closure(const std::vector<Monomial>& seed) {
  if (seed.empty()) throw InputError("borel closure of an empty seed");
  int vars = seed[0].vars();
  int degree = seed[0].degree();
  for (const Monomial& t : seed)
    if (t.vars() != vars || t.degree() != degree)
      throw InputError("borel closure: mixed ambients in the seed");
  std::set<Monomial, std::greater<>> seen(seed.begin(), seed.end());
  std::deque<Monomial> todo(seed.begin(), seed.end());
  while (!todo.empty()) {
    Monomial t = std::move(todo.front());
    todo.pop_front();
    for (int j = 2; j <= vars; ++j) {
      if (t.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        Monomial up = t.elementary_move(i, j);
        if (seen.insert(up).second) todo.push_back(up);
      }
    }
  }
  return MonomialSet::of(vars, degree,
                         std::vector<Monomial>(seen.begin(), seen.end()));
}

}  // namespace lexbetti
