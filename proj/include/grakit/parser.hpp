#pragma once

#include <string>
#include <vector>

#include "grakit/resolution.hpp"

namespace grakit {

struct TaskSpec {
    std::string name;
    std::string kind;
    // Raw values in canonical text form ("8", "R", "[4,6,8]"), keyed by
    // parameter name. `kind` is not repeated here.
    std::vector<std::pair<std::string, std::string>> params;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : params)
            if (k == key) return &v;
        return nullptr;
    }
};

struct NamedModule {
    std::string ring;  // owning ring name
    GradedModulePresentation pres;
};

struct SessionIR {
    std::vector<std::pair<std::string, GradedRingPresentation>> rings;
    std::vector<std::pair<std::string, NamedModule>> modules;
    std::vector<TaskSpec> tasks;

    const GradedRingPresentation* find_ring(const std::string& name) const;
    const NamedModule* find_module(const std::string& name) const;
};

// Parse and fully validate a session. Diagnostics carry line:column.
SessionIR parse_session(const std::string& text, const Budget* budget = nullptr);

}  // namespace grakit
