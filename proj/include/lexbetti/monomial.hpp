#ifndef LEXBETTI_MONOMIAL_HPP
#define LEXBETTI_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lexbetti {

using Count = std::int64_t;

/// A monomial in N ordered variables X1 > X2 > ... > XN, stored as its
/// exponent vector. Immutable: every operation returns a fresh value.
/// Variable indices in the API are 1-based.
class Monomial {
 public:
  /// Throws InputError on an empty vector or a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  /// Exponent of X_i, 1 <= i <= vars().
  int exponent(int i) const;
  const std::vector<int>& exponents() const { return exps_; }

  /// Largest i with X_i dividing this monomial.
  /// Throws PreconditionError for the constant monomial.
  int max_index() const;

  /// X_i * this.
  Monomial multiplied_by_var(int i) const;

  /// The elementary Borel move X_i * this / X_j, requires i < j and a
  /// positive exponent of X_j. The result is strictly lex-larger.
  Monomial elementary_move(int i, int j) const;

  bool divides(const Monomial& other) const;

  /// Image under dropping to one variable fewer: the last exponent is folded
  /// into the one before it. Requires vars() >= 2. Monotone (weakly) with
  /// respect to lex order among monomials of equal degree.
  Monomial fold_last_var() const;

  /// "X1^2*X3" style rendering, "1" for the constant monomial.
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Pure lexicographic comparison: the first differing exponent decides,
  /// larger exponent means lex-larger monomial. Total order on monomials of
  /// a fixed variable count; throws PreconditionError on a count mismatch.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<int> exps_;
  int degree_;
};

}  // namespace lexbetti

#endif
