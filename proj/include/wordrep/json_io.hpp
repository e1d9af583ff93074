#pragma once

#include "json.hpp"
#include "wordrep/coloring.hpp"
#include "wordrep/construct.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/words.hpp"

namespace wordrep {

using Json = nlohmann::ordered_json;

Json to_json(const ShortcutWitness& w);
Json to_json(const ColoringCertificate& c);
Json to_json(const UniformSearchResult& r);
Json to_json(const Orientation& o);
Json to_json(const Factorization& f);
Json to_json(const Certificate& c);

// {n, a, b, verdict, theorem_tag, rep_number_upper, certificate, verify_ok,
// elapsed_ms}. For specs outside the 5-regular shape n is the order and a, b
// are null; "jumps" is always present. elapsed_ms is omitted when
// with_timing is false.
Json to_json(const ClassificationResult& r, bool with_timing = true);

// Throws UsageError naming the first missing or mistyped field.
void validate_result_json(const Json& j);

const char* to_string(UniformSearchStatus s);

}  // namespace wordrep
