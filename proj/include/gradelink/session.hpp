#ifndef GRADELINK_SESSION_HPP
#define GRADELINK_SESSION_HPP

#include <string>

#include <json.hpp>

#include "gradelink/field.hpp"

namespace gradelink {

/* Run one batch command: parse the session document (ring, named modules,
 * named maps, command + args), dispatch, and produce the report. Reports
 * are deterministic given (input, seed); the single "timing_ms" field is
 * the only nondeterministic entry. */
nlohmann::ordered_json run_session(const nlohmann::ordered_json& input);

/* Built-in paper fixtures as full session documents. */
nlohmann::ordered_json fixture_document(const std::string& name);

/* Exit-code policy: 0 computed, 2 input/precondition error, 3 budget or
 * degree-cap truncation. */
int exit_code_for(const Error& e);

}  // namespace gradelink

#endif
