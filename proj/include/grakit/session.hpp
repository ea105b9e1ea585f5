#pragma once

#include <nlohmann/json.hpp>

#include "grakit/cache.hpp"
#include "grakit/parser.hpp"
#include "grakit/theorems.hpp"

namespace grakit {

struct TaskResult {
    nlohmann::json doc;  // deterministic payload, no timestamp
    int exit_code = 0;   // 0 holds/success, 1 fails-style verdict
};

// Built-in module references: "k" (residue field), "m" (maximal ideal), the
// ring's own name (cyclic free module), otherwise a declared module.
GradedModulePresentation resolve_module_ref(const SessionIR& s, const GradedRingPresentation& R,
                                            const std::string& ring_name, const std::string& ref,
                                            const Budget* budget = nullptr);

// Content hash over the canonical forms of the referenced objects plus the
// task record and format version.
std::string task_cache_key(const SessionIR& s, const TaskSpec& t);

TaskResult run_task(const SessionIR& s, const TaskSpec& t, const Cache* cache = nullptr,
                    const Budget* budget = nullptr, int jobs = 1);

}  // namespace grakit
