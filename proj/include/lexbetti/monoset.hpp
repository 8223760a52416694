#ifndef LEXBETTI_MONOSET_HPP
#define LEXBETTI_MONOSET_HPP

#include <vector>

#include "lexbetti/monomial.hpp"

namespace lexbetti {

/// A finite set of monomials of one fixed degree D in N variables, kept
/// canonically sorted in strictly descending lex order (no duplicates).
class MonomialSet {
 public:
  /// Empty set with the given ambient data. vars >= 1, degree >= 0.
  MonomialSet(int vars, int degree);

  /// Canonicalizing factory: sorts descending, drops duplicates, validates
  /// that every element lives in the declared ambient (InputError otherwise).
  static MonomialSet of(int vars, int degree, std::vector<Monomial> elements);

  int vars() const { return vars_; }
  int degree() const { return degree_; }
  Count size() const { return static_cast<Count>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  /// Strictly descending lex.
  const std::vector<Monomial>& elements() const { return elems_; }

  /// Lex-smallest element; throws PreconditionError when empty.
  const Monomial& min() const;

  bool contains(const Monomial& m) const;

  /// Copy with the lex-smallest element removed; throws when empty.
  MonomialSet without_min() const;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  int vars_;
  int degree_;
  std::vector<Monomial> elems_;
};

/// Number of monomials of the given degree in the given number of variables.
Count ambient_size(int vars, int degree);

/// First (lex-largest) monomial of a degree: X1^degree.
Monomial lex_top(int vars, int degree);

/// Steps an exponent vector to its descending-lex successor within its
/// degree. Returns false (vector untouched) at the lex-smallest monomial.
bool next_lex(std::vector<int>& exponents);

/// Closed under elementary moves X_i/X_j, i < j.
bool is_borel(const MonomialSet& s);

/// Downward-closed in lex order within its degree: every monomial lex-larger
/// than an element (of the same degree) is also an element.
bool is_lex_segment(const MonomialSet& s);

/// The first `size` monomials of the degree in descending lex order.
/// Throws PreconditionError when size exceeds the ambient count.
MonomialSet lex_segment(int vars, int degree, Count size);

/// All products (variable * element): the degree-(D+1) span of the set.
MonomialSet expand(const MonomialSet& s);

/// |expand(s)| computed without building it, valid for Borel s only:
/// the products X_i * T with i >= m(T) are pairwise distinct and exhaustive,
/// so the size is the sum over elements of vars - m(T) + 1.
Count expand_size_borel(const MonomialSet& s);

/// Slices by the exponent of the last variable: slot d collects the elements
/// with last exponent exactly d, with that exponent dropped (vars-1
/// variables, degree D-d). Requires vars >= 2. Returns D+1 slots, d = 0..D.
std::vector<MonomialSet> decompose(const MonomialSet& s);

/// Inverse of decompose: reattaches last exponents d = 0..slots.size()-1.
MonomialSet recompose(const std::vector<MonomialSet>& slots);

/// Replaces every slot of the decomposition by the lex segment of the same
/// size. Preserves size; maps Borel sets to Borel sets.
MonomialSet lexify_slots(const MonomialSet& s);

struct MaxIndexStats {
  std::vector<Count> per_index;  // per_index[i-1] = #{T : m(T) == i}
  std::vector<Count> prefix;     // prefix[i-1]    = #{T : m(T) <= i}
};

/// Max-index census of a set of positive degree (DegreeZero otherwise).
MaxIndexStats max_index_stats(const MonomialSet& s);

/// Sum over elements of C(m(T) - 1, q): the per-set Betti statistic that
/// turns the Eliahou-Kervaire formula into set arithmetic. Degree >= 1.
Count betti_stat(const MonomialSet& s, int q);

/// Same value through the closed form |s| * C(N-1, q) minus the weighted
/// prefix counts; valid for arbitrary sets, not only Borel ones.
Count betti_stat_closed(const MonomialSet& s, int q);

/// Whether the prefix counts of the lex segment are dominated by those of
/// the Borel set: m_{<=i}(lex) <= m_{<=i}(borel) for all i. Requires equal
/// ambients and sizes, and a Borel right-hand side.
bool prefix_counts_dominated(const MonomialSet& lex, const MonomialSet& borel);

/// Smallest Borel set containing the seed monomials (all of one degree).
MonomialSet borel_closure(const std::vector<Monomial>& seed);

}  // namespace lexbetti

#endif
