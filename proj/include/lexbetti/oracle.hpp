#ifndef LEXBETTI_ORACLE_HPP
#define LEXBETTI_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lexbetti/ideal.hpp"

namespace lexbetti {

inline constexpr int kDefaultSizeGuard = 14;

/// Exact rank over the integers (fraction-free Bareiss elimination with
/// full pivoting, arbitrary-precision intermediates).
int exact_rank(const std::vector<std::vector<long long>>& rows);

/// Raw Taylor complex data for a generating list (need not be minimal; the
/// list order is irrelevant to the betas).
struct TaylorReport {
  Count generator_count = 0;
  std::vector<Count> chain_dims;  // chain_dims[k] = C(r, k+1), k = 0..r-1
  std::vector<Count> ranks;       // ranks[k] = rank of the k+1st differential
  std::vector<Count> betas;       // betas[q], q = 0..r-1
};

/// Betti numbers via the Taylor complex tensored down to the base field:
/// basis elements are nonempty subsets F of the generators, the differential
/// sends F to the signed sum of its facets G with lcm(G) == lcm(F), and
/// beta_q = dim_q - rank_q - rank_{q+1}. Independent of every lex/Borel
/// formula in this library; used as the cross-checking oracle.
/// Throws SizeGuardError when the list exceeds size_guard (2^r scaling).
TaylorReport taylor_report(const std::vector<Monomial>& generators, int vars,
                           int size_guard = kDefaultSizeGuard);

/// The report of the minimal generators, shaped into a BettiTable (betas
/// padded/truncated to vars entries; entries at q >= vars are asserted 0).
BettiTable taylor_betti(const MonomialIdeal& ideal, int size_guard = kDefaultSizeGuard);

/// All Borel subsets of the degree-`degree` monomials, built by closing
/// downward from the top. Guarded: ambient count above 20 throws.
std::vector<MonomialSet> enumerate_borel_sets(int vars, int degree);

/// Deterministic random Borel ideal: Bernoulli(density) seeds per monomial
/// per degree 1..max_degree, per-degree Borel closure, minimalization.
MonomialIdeal random_borel_ideal(int vars, int max_degree, std::uint64_t seed,
                                 double density);

}  // namespace lexbetti

#endif
