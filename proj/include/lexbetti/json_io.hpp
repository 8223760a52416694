#ifndef LEXBETTI_JSON_IO_HPP
#define LEXBETTI_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "lexbetti/ideal.hpp"
#include "lexbetti/macaulay.hpp"
#include "lexbetti/monoset.hpp"

// JSON wire formats. All readers throw InputError with a location hint on
// malformed data; readers of sets and ideals accept elements in any order
// and canonicalize. nlohmann::json objects keep keys sorted, which together
// with dump(2) makes writer output byte-stable.

namespace lexbetti {

nlohmann::json to_json(const Monomial& m);  // plain exponent array [2,0,1]
Monomial monomial_from_json(const nlohmann::json& j);

// {"vars": N, "degree": D, "elements": [[...], ...]}
nlohmann::json to_json(const MonomialSet& s);
MonomialSet set_from_json(const nlohmann::json& j);

// {"vars": N, "values": [h0, h1, ...]}
nlohmann::json to_json(const HilbertFunction& h);
HilbertFunction hilbert_from_json(const nlohmann::json& j);

// {"vars": N, "generators": [[...], ...]}
nlohmann::json to_json(const MonomialIdeal& ideal);

struct LoadedIdeal {
  MonomialIdeal ideal;
  bool was_minimal = true;  // false when minimalization dropped generators
};
LoadedIdeal ideal_from_json(const nlohmann::json& j);

// {"betas": [...], "by_degree": {"2": [...], ...}}
nlohmann::json to_json(const BettiTable& t);

nlohmann::json load_json_file(const std::string& path);

}  // namespace lexbetti

#endif
