#ifndef QUIVERTILT_TOOLS_REPORT_HPP
#define QUIVERTILT_TOOLS_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "quivertilt/mutation.hpp"
#include "quivertilt/phi.hpp"
#include "quivertilt/quiver.hpp"

// Shared by the CLI and the HTTP service, so both speak one schema.
namespace quivertilt::tools {

nlohmann::json gentle_to_json(const GentleReport& r);
std::string gentle_to_text(const GentleReport& r);

nlohmann::json threads_to_json(const ThreadSet& t);
std::string threads_to_text(const ThreadSet& t);

nlohmann::json trace_to_json(const MutationTrace& t);  // [{kind, vertex}, ...]
MutationKind parse_kind(const std::string& s);          // throws DomainError

// Gentleness, root cycle, saturated cycles and both recognizers. With
// `params`, extract_params too (which may run a full reduction).
nlohmann::json classify_json(const BoundQuiver& q, bool params);
std::string classify_text(const nlohmann::json& c);

// Every vertex with at least one admissible kind.
nlohmann::json mutable_vertices(const BoundQuiver& q);

}  // namespace quivertilt::tools

#endif  // QUIVERTILT_TOOLS_REPORT_HPP
