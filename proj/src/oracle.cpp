#include "lexbetti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "lexbetti/errors.hpp"
#include "lexbetti/macaulay.hpp"
#include "lexbetti/rng.hpp"

namespace lexbetti {

namespace {

template <typename T>
T entry_abs(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Fraction-free Gaussian elimination with full pivoting: every division is
// exact by the Sylvester determinant identity, so the arithmetic stays in Z.
// The checked variant (__int128 entries) reports -1 as soon as a value could
// endanger the next round of products; the caller then reruns with bignums.
template <typename T, bool kChecked>
int rank_elim(std::vector<std::vector<T>> m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  constexpr long long kSafe = 1LL << 62;
  T prev = 1;
  std::size_t rank = 0;
  while (rank < nr && rank < nc) {
    std::size_t pr = nr, pc = nc;
    bool unit = false;  // nothing beats a pivot of magnitude one
    for (std::size_t i = rank; i < nr && !unit; ++i)
      for (std::size_t j = rank; j < nc; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == nr || entry_abs(m[i][j]) < entry_abs(m[pr][pc])) {
          pr = i;
          pc = j;
          if (entry_abs(m[i][j]) == 1) { unit = true; break; }
        }
      }
    if (pr == nr) break;
    m[rank].swap(m[pr]);
    if (pc != rank)
      for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][rank], m[i][pc]);
    const T piv = m[rank][rank];
    for (std::size_t i = rank + 1; i < nr; ++i) {
      const T f = m[i][rank];
      if (f == 0) {
        if (piv == prev) continue;
        if (piv == -prev) {
          for (std::size_t j = rank + 1; j < nc; ++j) m[i][j] = -m[i][j];
          continue;
        }
      }
      for (std::size_t j = rank + 1; j < nc; ++j) {
        m[i][j] = (piv * m[i][j] - f * m[rank][j]) / prev;
        if constexpr (kChecked)
          if (entry_abs(m[i][j]) > kSafe) return -1;
      }
      m[i][rank] = 0;
    }
    prev = piv;
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int exact_rank(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t nc = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != nc) throw InputError("ragged matrix");
  if (nc == 0) return 0;

  // Zero rows and columns never carry rank; compact them away first.
  std::vector<bool> col_used(nc, false);
  std::vector<std::size_t> live_rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < nc; ++j)
      if (rows[i][j] != 0) { any = true; col_used[j] = true; }
    if (any) live_rows.push_back(i);
  }
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < nc; ++j)
    if (col_used[j]) live_cols.push_back(j);
  if (live_rows.empty()) return 0;

  std::vector<std::vector<__int128>> fast(live_rows.size(),
                                          std::vector<__int128>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      fast[i][j] = rows[live_rows[i]][live_cols[j]];
  int r = rank_elim<__int128, true>(std::move(fast));
  if (r >= 0) return r;

  std::vector<std::vector<BigInt>> slow(live_rows.size(),
                                        std::vector<BigInt>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      slow[i][j] = rows[live_rows[i]][live_cols[j]];
  return rank_elim<BigInt, false>(std::move(slow));
}

TaylorReport taylor_report(const std::vector<Monomial>& generators, int vars,
                           int size_guard) {
  if (vars < 1) throw InputError("need at least one variable");
  for (const Monomial& g : generators) {
    if (g.vars() != vars)
      throw InputError("generator " + g.str() + " has the wrong variable count");
    if (g.degree() == 0)
      throw InputError("generator of degree zero (the unit ideal is excluded)");
  }
  const int r = static_cast<int>(generators.size());
  TaylorReport rep;
  rep.generator_count = r;
  if (r == 0) return rep;
  if (r > size_guard)
    throw SizeGuardError("Taylor complex over " + std::to_string(r) +
                         " generators exceeds the size guard of " +
                         std::to_string(size_guard));

  // lcm of every generator subset, built by peeling the lowest bit.
  const std::size_t full = std::size_t{1} << r;
  std::vector<std::vector<int>> lcm(full);
  lcm[0].assign(static_cast<std::size_t>(vars), 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::vector<int>& rest = lcm[mask & (mask - 1)];
    const std::vector<int>& g = generators[static_cast<std::size_t>(low)].exponents();
    std::vector<int> cur(static_cast<std::size_t>(vars));
    for (int k = 0; k < vars; ++k)
      cur[static_cast<std::size_t>(k)] =
          std::max(rest[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);
    lcm[mask] = std::move(cur);
  }

  rep.chain_dims.resize(static_cast<std::size_t>(r));
  rep.ranks.assign(static_cast<std::size_t>(r), 0);
  for (int k = 0; k < r; ++k)
    rep.chain_dims[static_cast<std::size_t>(k)] = to_count(binom_ext(r, k + 1));

  // The tensored differential keeps a facet only when it shares the lcm of
  // its superset, so it preserves the multidegree. Splitting the subsets by
  // lcm block-diagonalizes every differential; ranks add up per block.
  std::map<std::vector<int>, std::vector<std::size_t>> blocks;
  for (std::size_t mask = 1; mask < full; ++mask) blocks[lcm[mask]].push_back(mask);

  for (const auto& [mu, members] : blocks) {
    std::vector<std::vector<std::size_t>> by_size(static_cast<std::size_t>(r) + 1);
    for (std::size_t mask : members)
      by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (int p = 2; p <= r; ++p) {
      const auto& cols = by_size[static_cast<std::size_t>(p)];
      const auto& row_masks = by_size[static_cast<std::size_t>(p) - 1];
      if (cols.empty() || row_masks.empty()) continue;
      std::map<std::size_t, std::size_t> row_of;
      for (std::size_t i = 0; i < row_masks.size(); ++i) row_of[row_masks[i]] = i;
      std::vector<std::vector<long long>> mat(
          row_masks.size(), std::vector<long long>(cols.size(), 0));
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const std::size_t colmask = cols[ci];
        int pos = 0;
        for (int b = 0; b < r; ++b) {
          if (!(colmask >> b & 1)) continue;
          const std::size_t facet = colmask ^ (std::size_t{1} << b);
          if (lcm[facet] == mu)
            mat[row_of.at(facet)][ci] = pos % 2 == 0 ? 1 : -1;
          ++pos;
        }
      }
      rep.ranks[static_cast<std::size_t>(p) - 1] += exact_rank(mat);
    }
  }

  rep.betas.assign(static_cast<std::size_t>(r), 0);
  for (int q = 0; q < r; ++q)
    rep.betas[static_cast<std::size_t>(q)] =
        rep.chain_dims[static_cast<std::size_t>(q)] -
        rep.ranks[static_cast<std::size_t>(q)] -
        (q + 1 < r ? rep.ranks[static_cast<std::size_t>(q) + 1] : 0);
  return rep;
}

BettiTable taylor_betti(const MonomialIdeal& ideal, int size_guard) {
  TaylorReport rep = taylor_report(ideal.generators(), ideal.vars(), size_guard);
  BettiTable t;
  t.vars = ideal.vars();
  t.betas.assign(static_cast<std::size_t>(ideal.vars()), 0);
  for (std::size_t q = 0; q < rep.betas.size(); ++q) {
    if (q < t.betas.size()) {
      t.betas[q] = rep.betas[q];
    } else if (rep.betas[q] != 0) {
      throw std::logic_error("Taylor homology persists past the variable count");
    }
  }
  return t;
}

std::vector<MonomialSet> enumerate_borel_sets(int vars, int degree) {
  const Count amb = ambient_size(vars, degree);
  if (amb > 20)
    throw SizeGuardError("ambient of " + std::to_string(amb) +
                         " monomials is too large to enumerate Borel subsets");
  std::vector<Monomial> mons;
  {
    std::vector<int> cur = lex_top(vars, degree).exponents();
    do {
      mons.push_back(Monomial(cur));
    } while (next_lex(cur));
  }
  const int n = static_cast<int>(mons.size());
  std::map<Monomial, int, std::greater<>> index;
  for (int k = 0; k < n; ++k) index[mons[static_cast<std::size_t>(k)]] = k;

  // Elementary moves point to lex-larger monomials, hence to smaller
  // indices; a subset is Borel exactly when every element's move targets
  // are present. Depth-first inclusion in lex order needs only decided bits.
  std::vector<std::vector<int>> needs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Monomial& t = mons[static_cast<std::size_t>(k)];
    for (int j = 2; j <= vars; ++j) {
      if (t.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i)
        needs[static_cast<std::size_t>(k)].push_back(index.at(t.elementary_move(i, j)));
    }
  }

  std::vector<MonomialSet> out;
  // Iterative DFS over (position, chosen-mask) pairs.
  struct Frame { int k; std::uint32_t mask; };
  std::vector<Frame> todo{{0, 0}};
  while (!todo.empty()) {
    Frame f = todo.back();
    todo.pop_back();
    if (f.k == n) {
      std::vector<Monomial> elems;
      for (int k = 0; k < n; ++k)
        if (f.mask >> k & 1) elems.push_back(mons[static_cast<std::size_t>(k)]);
      out.push_back(MonomialSet::of(vars, degree, std::move(elems)));
      continue;
    }
    todo.push_back({f.k + 1, f.mask});  // exclude mons[k]
    bool can_include = true;
    for (int need : needs[static_cast<std::size_t>(f.k)])
      if (!(f.mask >> need & 1)) { can_include = false; break; }
    if (can_include)
      todo.push_back({f.k + 1, f.mask | (std::uint32_t{1} << f.k)});
  }
  std::sort(out.begin(), out.end(), [](const MonomialSet& a, const MonomialSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end(),
                                        std::greater<>());
  });
  return out;
}

MonomialIdeal random_borel_ideal(int vars, int max_degree, std::uint64_t seed,
                                 double density) {
  if (vars < 2) throw PreconditionError("random Borel ideal needs at least two variables");
  if (max_degree < 1) throw PreconditionError("random Borel ideal needs max_degree >= 1");
  Rng rng(seed);
  std::vector<Monomial> gens;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> picked;
    std::vector<int> cur = lex_top(vars, d).exponents();
    do {
      if (rng.chance(density)) picked.push_back(Monomial(cur));
    } while (next_lex(cur));
    if (picked.empty()) continue;
    MonomialSet closed = borel_closure(picked);
    for (const Monomial& t : closed.elements()) gens.push_back(t);
  }
  return MonomialIdeal::minimalize(std::move(gens), vars);
}

}  // namespace lexbetti
