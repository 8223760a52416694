#ifndef LEXBETTI_FUZZ_HPP
#define LEXBETTI_FUZZ_HPP

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>

#include "lexbetti/ideal.hpp"
#include "lexbetti/monoset.hpp"
#include "lexbetti/oracle.hpp"
#include "lexbetti/rng.hpp"

// Property batteries shared by the fuzz CLI command, the unit tests and the
// acceptance suite. Each check has a stable name so failures can be
// re-targeted during minimization.

namespace lexbetti {

struct CheckFailure {
  std::string check;
  std::string detail;
  nlohmann::json reproducer;  // minimized witness, ready to save and replay
};

struct FuzzStats {
  long long cases = 0;
  long long checks = 0;
};

/// Random Borel set: a handful of seed monomials in a random ambient
/// (2..max_vars variables, 1..max_degree degree), closed under moves.
MonomialSet random_borel_set(int max_vars, int max_degree, Rng& rng);

/// Set-level battery: expansion size and census identities, decomposition
/// round trip, slot lexification invariants, lex-prefix dominance for every
/// truncation size, expansion comparisons against the lex segment of equal
/// size, closed-form betti statistics (also on a non-Borel sample).
/// `only` restricts to one named check (minimizer support).
std::optional<CheckFailure> check_borel_set_properties(const MonomialSet& borel,
                                                       Rng& rng, FuzzStats& stats,
                                                       const std::string& only = "");

/// Ideal-level battery: classification hierarchy, minimality fixed point,
/// slicewise against generatorwise Betti tables, Taylor oracle agreement
/// (within the guard), Hilbert round trip through the lex ideal, closed-form
/// agreement on the lex side, first-syzygy formula, lex-bound domination.
std::optional<CheckFailure> check_ideal_properties(const MonomialIdeal& ideal,
                                                   int size_guard, FuzzStats& stats,
                                                   const std::string& only = "");

/// One seeded fuzz case: derives sub-seeds, builds a random Borel set and a
/// random Borel ideal, runs both batteries, shrinks any failure.
std::optional<CheckFailure> run_fuzz_case(std::uint64_t case_seed, int max_vars,
                                          int max_degree, int size_guard,
                                          FuzzStats& stats);

/// Greedy shrinking: repeatedly drop the lex-smallest element (sets stay
/// Borel under that) while the named check still fails.
MonomialSet shrink_set(MonomialSet failing, const std::string& check,
                       std::uint64_t seed, FuzzStats& stats);

/// Greedy shrinking for ideals: try dropping each generator in turn
/// (re-minimalizing) while the named check still fails.
MonomialIdeal shrink_ideal(MonomialIdeal failing, const std::string& check,
                           int size_guard, FuzzStats& stats);

}  // namespace lexbetti

#endif
