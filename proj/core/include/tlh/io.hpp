#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "tlh/algebra.hpp"
#include "tlh/cellular.hpp"

namespace tlh {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars are [a, b]; each coordinate is a JSON integer when it fits in 64
// bits, otherwise a decimal string, and "p/q" for non-integral rationals.
Json to_json(const GoldenInt& x);
Json to_json(const GoldenRat& x);
GoldenInt golden_int_from_json(const Json& j);
GoldenRat golden_rat_from_json(const Json& j);

// Laurent polynomials are [[e, a, b], ...] with e strictly increasing.
Json to_json(const LaurentInt& p);
Json to_json(const LaurentRat& p);
LaurentInt laurent_int_from_json(const Json& j);
LaurentRat laurent_rat_from_json(const Json& j);

// {"n_top", "n_bottom", "arcs": [{"from": "N3", "to": "S1", "dec": k}], "loops": [...]}
Json to_json(const DecoratedTangle& t);
DecoratedTangle tangle_from_json(const Json& j);

// {"points": m, "arcs": [{"from": a, "to": b, "dec": 0|1}]}
Json to_json(const HalfDiagram& h);
HalfDiagram half_from_json(const Json& j);

// {"d1": half, "d2": half, "bullet": bool}
Json to_json(const DyadicForm& f);
DyadicForm dyadic_from_json(const Json& j);

/// A diagram is written as its tangle. Reading also accepts the dyadic form.
Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// {"m": m, "terms": [{"diagram": ..., "coeff": [[e, a, b], ...]}]}
Json to_json(const Element& x);
/// Accepts an element object or a bare diagram (coefficient 1).
Element element_from_json(const Json& j);

Json to_json(const GeneratorWord& w);
Json to_json(const CellLabel& l);
Json to_json(const RingMatrix& m);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace tlh
