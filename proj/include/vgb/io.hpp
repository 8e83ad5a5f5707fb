#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vgb/polynomial.hpp"

namespace vgb {

/// Text grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | variable ['^' integer]
///   variable := y<k> | x[a1,...,as] | any name declared by the ring
/// Whitespace is ignored between tokens. Errors carry 1-based line/column.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const TermOrder& order);
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return parse_polynomial(text, ring, ring->default_order());
}

/// Prints terms in descending order of the polynomial's own order.
std::string to_string(const Polynomial& f);
std::string monomial_to_string(const MultiIndex& m, const Ring& ring);

/// {"kind":"S","s":3} | {"kind":"Rd","s":3,"d":2} | {"kind":"joint",...} |
/// {"kind":"custom","vars":[...]}
nlohmann::ordered_json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const nlohmann::json& j);

/// {"ring":..., "terms":[{"coeff":"-3/2","exps":[...]}]} plus, for rings with
/// x variables, an "index" table mapping exponent position to multi-index.
nlohmann::ordered_json polynomial_to_json(const Polynomial& f);
/// Just the "terms" array.
nlohmann::ordered_json terms_to_json(const Polynomial& f);
/// Accepts a term object list, a {"terms": [...]} object or a text string.
Polynomial polynomial_from_json(const nlohmann::json& j, const RingPtr& ring, const TermOrder& order);

nlohmann::ordered_json index_table(const Ring& ring);

}  // namespace vgb
