#pragma once

// JSON interchange:
//   ring     {"base": {"kind": "integers" | "rationals" | "prime-field", "p": 5}
//                      or {"kind": "number-layer", "generator": "i", "minimal_polynomial": "i^2+1"},
//             "vars": ["x", "y"], "extensions": [{"name": "y", "relation": "y^2+x^2-1"}]}
//   element  [[exponents...], "coefficient"] terms, largest first; on input an
//            expression string is accepted as well.

#include <string>

#include "json.hpp"
#include "picard/localization.hpp"
#include "picard/matrix.hpp"
#include "picard/ring.hpp"

namespace picard {

using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& ring);
/// PresentationError with the offending field in the message.
Ring ring_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const Ring& ring, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const Json& j);

Json localized_to_json(const LocalizedElement& x);
Json bezout_to_json(const BezoutCertificate& c);

/// Parse a document, converting syntax errors into PresentationError with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source_name);
Json load_json_file(const std::string& path);

}  // namespace picard
