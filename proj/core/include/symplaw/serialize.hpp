#pragma once

#include "symplaw/gma.hpp"
#include "symplaw/group_algebra.hpp"
#include "symplaw/invariants.hpp"
#include "symplaw/matrix.hpp"
#include "symplaw/poly.hpp"
#include "symplaw/rational.hpp"
#include "symplaw/symplectic.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace symplaw {

using json = nlohmann::ordered_json;

// Every *_from_json throws ParseError on schema mismatch.

json to_json(const Rational &r);
Rational rational_from_json(const json &j);

json to_json(const QMatrix &m);
QMatrix qmatrix_from_json(const json &j);

/// {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}
json to_json(const Poly &p);
/// Accepts the object form, a string expression or a number.
Poly poly_from_json(const json &j);

/// Row-major array of polynomial strings.
json to_json(const PolyMatrix &m);
PolyMatrix polymatrix_from_json(const json &j);

json to_json(const SymplecticContext &ctx);
SymplecticContext context_from_json(const json &j);

/// {"terms": [{"word": "g1 g2^-1", "coef": "p/q"}]}
json to_json(const GroupAlgebraElement &x);
GroupAlgebraElement element_from_json(const json &j);

/// {"d": n, "kind": "Sp"|"GSp", "generators": [...], "lambdas": [...]};
/// lambdas may be omitted.
json to_json(const InvolutiveRepresentation &rep);
InvolutiveRepresentation representation_from_json(const json &j);

/// {"arity": m, "factors": [{"sigma": i, "word": "X1 X2^j"},
/// {"lambda": i, "power": -1}, {"entry": i, "row": r, "col": c}]}
json to_json(const Invariant &f);
Invariant invariant_from_json(const json &j);

json to_json(const GmaSpec &spec);
GmaSpec gma_spec_from_json(const json &j);

/// Parses text, mapping JSON syntax errors to ParseError.
json parse_json(const std::string &text);

} // namespace symplaw
