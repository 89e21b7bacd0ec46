#pragma once

// JSON forms of the library's values. Keys keep insertion order so output is
// stable and round-trips byte for byte.

#include <nlohmann/json.hpp>

#include "symclass/classes.hpp"
#include "symclass/isotypic.hpp"
#include "symclass/oracle.hpp"
#include "symclass/subgroup.hpp"

namespace symclass {

using Json = nlohmann::ordered_json;

// {"0":2,"2":2,"4":1}
Json to_json(const Isotypic& a);
// Throws DomainError on malformed input.
Isotypic isotypic_from_json(const Json& j);

// ["1","Z2","D2"]
Json to_json(const ClassSet& classes);
ClassSet class_set_from_json(const Json& j);

// {"expr","isotypic","order","classes","count","even_harmonic","closed_form"}
Json to_json(const ClassReport& report);
Json to_json(const PairReport& report);
Json to_json(const TableReport& report);

// "S", "G" or null
Json closed_form_json(ClosedForm form);

} // namespace symclass
