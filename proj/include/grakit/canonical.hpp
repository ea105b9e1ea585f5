#pragma once

#include "grakit/parser.hpp"

namespace grakit {

// Deterministic serializations. Equal mathematical presentations produce
// identical bytes, and a session round-trips through parse_session.
std::string canonical_ring(const std::string& name, const GradedRingPresentation& R);
std::string canonical_module(const std::string& name, const NamedModule& M,
                             const GradedRingPresentation& R);
std::string canonical_task(const TaskSpec& t);
std::string canonical_session(const SessionIR& s);

// Hex SHA-256 of arbitrary bytes; the cache key primitive.
std::string sha256_hex(const std::string& bytes);

}  // namespace grakit
