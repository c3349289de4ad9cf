#pragma once

// JSON encodings shared by the command-line tool and the Python module.

#include <json.hpp>

#include "superrsk/alphabet.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/polynomial.hpp"
#include "superrsk/tableau.hpp"
#include "superrsk/verify.hpp"

namespace srsk::io {

using nlohmann::json;

json to_json(Letter x);
json to_json(const Shuffle& s);  // ["t1","u1","t2"]
json to_json(const Word& v);
json to_json(const Tableau& t);           // {"rows": [["t1","u1"],["u1"]]}
json to_json(const RecordingTableau& q);  // {"rows": [[1,2],[3]]}
json to_json(const PendingAction& a);
json to_json(const Step& s);
json to_json(const InsertionTrace& trace);
/// [{"x":[..],"y":[..],"coeff":c}] in increasing exponent order; coefficients
/// that do not fit in 64 bits are written as decimal strings.
json to_json(const Polynomial& p);
json to_json(const Report& r);

// Parsers throw std::invalid_argument on malformed input.
Shuffle shuffle_from_json(const json& j, const Alphabet& alphabet);
Word word_from_json(const json& j, const Alphabet& alphabet);
Tableau tableau_from_json(const json& j, const Alphabet& alphabet);
RecordingTableau recording_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);

}  // namespace srsk::io
