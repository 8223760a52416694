#ifndef LEXBETTI_MACAULAY_HPP
#define LEXBETTI_MACAULAY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lexbetti/monomial.hpp"

namespace lexbetti {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b) extended by zero: 0 whenever b < 0, a < 0 or a < b. Exact.
BigInt binom_ext(long long a, long long b);

/// Checked narrowing; throws SizeGuardError when the value leaves 64 bits.
Count to_count(const BigInt& v);

/// The unique binomial expansion of h >= 0 at base n >= 1:
///   h = C(t_n, n) + C(t_{n-1}, n-1) + ... + C(t_i, i)
/// with t_n > t_{n-1} > ... > t_i >= i >= 1, produced greedily. Empty for
/// h = 0. Shifted evaluations of this expansion drive every closed formula.
class MacaulayExpansion {
 public:
  static MacaulayExpansion of(Count h, int base);

  int base() const { return base_; }
  bool empty() const { return tops_.empty(); }

  /// Tops t_n, t_{n-1}, ... aligned with bases n, n-1, ....
  const std::vector<Count>& tops() const { return tops_; }

  /// Sum of C(t_j + top_shift, j + base_shift) over the expansion.
  BigInt shifted(long long top_shift, long long base_shift) const;

  /// shifted(0, 0) narrowed back; equals the expanded h.
  Count value() const;

 private:
  MacaulayExpansion(int base, std::vector<Count> tops);
  int base_;
  std::vector<Count> tops_;
};

/// Least possible size of the degree-(d+1) slice of a monomial ideal whose
/// degree-d slice has h elements, in `vars` variables: the shifted(1, 0)
/// evaluation at base vars-1. Requires vars >= 2.
Count min_growth(Count h, int vars);

/// m_{<=i} of the lex segment with h elements: how many of its monomials
/// involve only X1..Xi. Closed form via shifted expansions; i = vars gives h
/// back. Requires 1 <= index <= vars.
Count lex_prefix_count(Count h, int vars, int index);

/// Values h(0), h(1), ..., h(d_max) of the dimension counts of a graded
/// monomial ideal slice by slice.
struct HilbertFunction {
  int vars = 0;
  std::vector<Count> values;

  int max_degree() const { return static_cast<int>(values.size()) - 1; }
  Count at(int d) const;  // 0 beyond the stored range, throws on d < 0

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

struct AdmissibilityReport {
  bool ok = true;
  std::optional<int> first_violation;  // lowest offending degree
  std::string reason;
};

/// Whether the values can occur as slice sizes of a monomial ideal: zero at
/// degree 0 (unit ideal excluded), within the ambient count everywhere, and
/// growing at least at the minimal lex rate.
AdmissibilityReport is_admissible(const HilbertFunction& h);

/// Degrees where the lex ideal of this Hilbert data acquires new minimal
/// generators, with counts.
struct GeneratorProfile {
  std::vector<std::pair<int, Count>> new_generators;  // (degree, count), counts > 0
  int max_degree = 0;      // largest generator degree, 0 when there are none
  bool stabilized = true;  // no new generators at the last provided degree
};

/// Requires admissible data (PreconditionError otherwise).
GeneratorProfile generator_degrees(const HilbertFunction& h);

}  // namespace lexbetti

#endif
