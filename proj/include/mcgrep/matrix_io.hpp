#pragma once

#include <string>

#include "mcgrep/matrix.hpp"

namespace mcg {

// Schema: {"dim": n, "domain": "rational"|"laurent"|"interval", "entries": rows}.
// Rational entries are "p/q" strings, symbolic entries are sorted
// [qexp, texp, "coeff"] triples, interval entries are ["lo", "hi"] pairs with
// a shared top-level "precision".  Import of an export is exact.
std::string matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const std::string& text);

// Rows of "p/q" fields.  Only the rational domain has a CSV form.
std::string matrix_to_csv(const AnyMatrix& m);

}  // namespace mcg
