#include "grakit/canonical.hpp"

#include <openssl/evp.h>

namespace grakit {

std::string canonical_ring(const std::string& name, const GradedRingPresentation& R) {
    std::string out = "ring " + name + " { char=" + std::to_string(R.ctx.field.modulus()) +
                      "; vars=[";
    for (int v = 0; v < R.ctx.nvars(); ++v) {
        if (v) out += ",";
        out += R.var_names[v] + ":" + std::to_string(R.ctx.weights[v]);
    }
    out += "]; ideal=[";
    for (std::size_t g = 0; g < R.ideal_gens.size(); ++g) {
        if (g) out += ", ";
        out += poly_to_string(R.ctx, R.ideal_gens[g], R.var_names);
    }
    return out + "]; }\n";
}

std::string canonical_module(const std::string& name, const NamedModule& M,
                             const GradedRingPresentation& R) {
    std::string out = "module " + name + " over " + M.ring + " { gens=[";
    for (std::size_t g = 0; g < M.pres.cover.gen_degrees.size(); ++g) {
        if (g) out += ",";
        out += std::to_string(M.pres.cover.gen_degrees[g]);
    }
    out += "]; rels=[";
    for (std::size_t c = 0; c < M.pres.relations.size(); ++c) {
        if (c) out += ", ";
        out += "[";
        const auto& col = M.pres.relations[c];
        for (std::size_t e = 0; e < col.entries.size(); ++e) {
            if (e) out += ", ";
            out += poly_to_string(R.ctx, col.entries[e], R.var_names);
        }
        out += "]";
    }
    return out + "]; }\n";
}

std::string canonical_task(const TaskSpec& t) {
    std::string out = "task " + t.name + " { kind=" + t.kind + ";";
    for (const auto& [k, v] : t.params) out += " " + k + "=" + v + ";";
    return out + " }\n";
}

std::string canonical_session(const SessionIR& s) {
    std::string out;
    for (const auto& [name, R] : s.rings) out += canonical_ring(name, R);
    for (const auto& [name, M] : s.modules) {
        const GradedRingPresentation* R = s.find_ring(M.ring);
        out += canonical_module(name, M, *R);
    }
    for (const auto& t : s.tasks) out += canonical_task(t);
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw internal_error("digest computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace grakit
