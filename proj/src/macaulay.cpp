#include "lexbetti/macaulay.hpp"

#include <limits>

#include "lexbetti/errors.hpp"

namespace lexbetti {

BigInt binom_ext(long long a, long long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;  // exact: C(a-b+k, k) is an integer at every step
  }
  return r;
}

Count to_count(const BigInt& v) {
  if (v < std::numeric_limits<Count>::min() || v > std::numeric_limits<Count>::max())
    throw SizeGuardError("value exceeds the 64-bit count range");
  return static_cast<Count>(v);
}

MacaulayExpansion::MacaulayExpansion(int base, std::vector<Count> tops)
    : base_(base), tops_(std::move(tops)) {}

MacaulayExpansion MacaulayExpansion::of(Count h, int base) {
  if (h < 0) throw PreconditionError("binomial expansion of a negative value");
  if (base < 1) throw PreconditionError("binomial expansion needs base >= 1");
  std::vector<Count> tops;
  Count rem = h;
  int j = base;
  while (rem > 0) {
    if (j < 1) throw PreconditionError("binomial expansion ran out of bases");
    if (j == 1) {  // C(a, 1) = a, and the doubling search below could overflow
      tops.push_back(rem);
      break;
    }
    // Largest a with C(a, j) <= rem. Doubling then bisection keeps every
    // probe exact and overflow-free (tops grow at most like sqrt for j >= 2).
    Count lo = j, hi = j;
    while (binom_ext(hi, j) <= rem) {
      lo = hi;
      hi = hi * 2 + 1;
    }
    while (lo + 1 < hi) {
      Count mid = lo + (hi - lo) / 2;
      if (binom_ext(mid, j) <= rem) lo = mid;
      else hi = mid;
    }
    tops.push_back(lo);
    rem -= to_count(binom_ext(lo, j));
    --j;
  }
  return MacaulayExpansion(base, std::move(tops));
}

BigInt MacaulayExpansion::shifted(long long top_shift, long long base_shift) const {
  BigInt total = 0;
  long long j = base_;
  for (Count t : tops_) {
    total += binom_ext(t + top_shift, j + base_shift);
    --j;
  }
  return total;
}

Count MacaulayExpansion::value() const { return to_count(shifted(0, 0)); }

Count min_growth(Count h, int vars) {
  if (vars < 2) throw PreconditionError("minimal growth needs at least two variables");
  if (h < 0) throw PreconditionError("minimal growth of a negative count");
  if (h == 0) return 0;
  return to_count(MacaulayExpansion::of(h, vars - 1).shifted(1, 0));
}

Count lex_prefix_count(Count h, int vars, int index) {
  if (vars < 1) throw PreconditionError("lex prefix count needs vars >= 1");
  if (index < 1 || index > vars)
    throw PreconditionError("lex prefix count: index out of range");
  if (h < 0) throw PreconditionError("lex prefix count of a negative size");
  if (index == vars || h == 0) return h;
  long long drop = vars - index;
  return to_count(MacaulayExpansion::of(h, vars - 1).shifted(-drop, -drop));
}

Count HilbertFunction::at(int d) const {
  if (d < 0) throw PreconditionError("Hilbert value at negative degree");
  if (d >= static_cast<int>(values.size())) return 0;
  return values[static_cast<std::size_t>(d)];
}

AdmissibilityReport is_admissible(const HilbertFunction& h) {
  auto fail = [](int d, std::string why) {
    AdmissibilityReport r;
    r.ok = false;
    r.first_violation = d;
    r.reason = std::move(why);
    return r;
  };
  if (h.vars < 1) return fail(0, "needs at least one variable");
  if (h.values.empty()) return fail(0, "no values provided");
  for (int d = 0; d <= h.max_degree(); ++d) {
    Count hd = h.values[static_cast<std::size_t>(d)];
    if (hd < 0) return fail(d, "negative value");
    if (d == 0) {
      if (hd != 0) return fail(0, "nonzero at degree 0 (unit ideal excluded)");
      continue;
    }
    if (BigInt(hd) > binom_ext(h.vars + d - 1, h.vars - 1))
      return fail(d, "value exceeds the monomial count of its degree");
    Count prev = h.values[static_cast<std::size_t>(d) - 1];
    Count floor = h.vars >= 2 ? min_growth(prev, h.vars) : (prev > 0 ? 1 : 0);
    if (hd < floor)
      return fail(d, "grows slower than the lex segment allows");
  }
  return AdmissibilityReport{};
}

GeneratorProfile generator_degrees(const HilbertFunction& h) {
  AdmissibilityReport adm = is_admissible(h);
  if (!adm.ok)
    throw PreconditionError("Hilbert data not admissible at degree " +
                            std::to_string(*adm.first_violation) + ": " + adm.reason);
  GeneratorProfile p;
  Count last_new = 0;
  for (int d = 1; d <= h.max_degree(); ++d) {
    Count prev = h.values[static_cast<std::size_t>(d) - 1];
    Count floor = h.vars >= 2 ? min_growth(prev, h.vars) : (prev > 0 ? 1 : 0);
    last_new = h.values[static_cast<std::size_t>(d)] - floor;
    if (last_new > 0) {
      p.new_generators.emplace_back(d, last_new);
      p.max_degree = d;
    }
  }
  p.stabilized = h.max_degree() == 0 || last_new == 0;
  return p;
}

}  // namespace lexbetti
