#ifndef LEXBETTI_IDEAL_HPP
#define LEXBETTI_IDEAL_HPP

#include <map>
#include <vector>

#include "lexbetti/macaulay.hpp"
#include "lexbetti/monomial.hpp"
#include "lexbetti/monoset.hpp"

namespace lexbetti {

/// A monomial ideal, held by its minimal generators sorted by (degree
/// ascending, lex descending). The zero ideal has no generators.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(int vars);

  /// Drops proper multiples and duplicates, sorts canonically. Generators of
  /// degree zero are rejected (InputError), as are mixed variable counts.
  static MonomialIdeal minimalize(std::vector<Monomial> generators, int vars);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  Count generator_count() const { return static_cast<Count>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  int max_generator_degree() const;  // 0 for the zero ideal

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  explicit MonomialIdeal(int vars) : vars_(vars) {}
  int vars_;
  std::vector<Monomial> gens_;
};

/// Graded Betti data: betas[q] for q = 0..vars-1, plus the per-generator-
/// degree split (only degrees contributing new generators appear).
struct BettiTable {
  int vars = 0;
  std::vector<Count> betas;
  std::map<int, std::vector<Count>> by_degree;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct Classification {
  bool is_lex = false;
  bool is_borel = false;
  bool is_stable = false;
};

/// The monomials of the ideal in one degree, as a canonical set.
MonomialSet graded_basis(const MonomialIdeal& ideal, int degree);

/// Slice sizes |ideal_d| for d = 0..max_degree.
HilbertFunction hilbert(const MonomialIdeal& ideal, int max_degree);

/// Extends the slice computation until the data stabilizes (the last degree
/// carries no new lex generators), so closed-form bounds apply. Throws
/// PreconditionError past max_generator_degree + cap steps.
HilbertFunction hilbert_stabilized(const MonomialIdeal& ideal, int cap = 64);

/// lex => borel => stable; each flag tested on the minimal generators.
Classification classify(const MonomialIdeal& ideal);

/// Eliahou-Kervaire: for a stable ideal, beta_q = sum over minimal
/// generators T of C(m(T) - 1, q). Throws PreconditionError otherwise. The
/// by_degree split groups generators by their degree.
BettiTable ek_betti(const MonomialIdeal& ideal);

/// Same table computed from graded slices alone: the degree-d contribution
/// is betti_stat(ideal_d) - betti_stat(expand(ideal_{d-1})). Stable only.
BettiTable betti_by_degree(const MonomialIdeal& ideal);

/// The unique lex ideal with the given Hilbert data. Requires admissibility.
MonomialIdeal lex_ideal(const HilbertFunction& h);

/// Betti table of lex_ideal(h) from the Hilbert data alone, no ideal built:
/// closed formulas in shifted Macaulay expansions. Requires admissible data
/// whose tail has stabilized (PreconditionError otherwise). This is the
/// sharp upper bound for every ideal with these slice sizes.
BettiTable closed_form_betti(const HilbertFunction& h);

/// First syzygy count of the lex ideal, evaluated straight from shifted
/// Macaulay expansions without building the whole table. Matches
/// closed_form_betti(h).betas[1].
Count beta1_closed_form(const HilbertFunction& h);

/// Componentwise betas[q] >= betas[q] for all q; requires equal vars.
bool dominates(const BettiTable& upper, const BettiTable& lower);

/// Upper bound for the Betti numbers of `ideal` from its Hilbert data:
/// closed_form_betti(hilbert(ideal, max_degree)). max_degree < 0 means auto
/// (extend until stabilized).
BettiTable bound_for(const MonomialIdeal& ideal, int max_degree = -1);

}  // namespace lexbetti

#endif
