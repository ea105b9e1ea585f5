#include "grakit/report.hpp"

#include <chrono>
#include <sstream>

namespace grakit {

using nlohmann::json;

json json_of_betti(const BettiTable& B) {
    json entries = json::array();
    for (const auto& [ij, v] : B.entries)
        if (v != 0) entries.push_back({ij.first, ij.second, v});
    return {{"bound", B.bound}, {"finite", B.finite}, {"entries", entries}};
}

json json_of_biseries(const TruncatedBiseries& S) {
    json entries = json::array();
    for (const auto& [ij, c] : S.coeffs) entries.push_back({ij.first, ij.second, c.str()});
    return {{"t_bound", S.t_bound}, {"entries", entries}};
}

json json_of_laurent(const LaurentPoly& h) {
    json entries = json::array();
    for (const auto& [j, c] : h.coeffs) entries.push_back({j, c.str()});
    return entries;
}

json json_of_leq(const LeqVerdict& v) {
    if (std::holds_alternative<LeqHolds>(v)) return {{"holds", true}};
    const auto& f = std::get<LeqFails>(v);
    return {{"holds", false},
            {"witness", {{"i", f.i}, {"j", f.j}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}}}};
}

json json_of_koszul(const KoszulVerdict& v) {
    if (std::holds_alternative<KoszulUpTo>(v))
        return {{"verdict", "KoszulUpTo"}, {"bound", std::get<KoszulUpTo>(v).bound}};
    const auto& nk = std::get<NotKoszul>(v);
    return {{"verdict", "NotKoszul"}, {"certificate", {nk.i, nk.j}}};
}

std::string render_json(json doc, bool with_timestamp) {
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now();
        doc["meta"]["timestamp"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    }
    return doc.dump(2) + "\n";
}

json strip_timestamp(json doc) {
    if (doc.contains("meta") && doc["meta"].is_object()) doc["meta"].erase("timestamp");
    return doc;
}

namespace {

bool is_scalar_triple_array(const json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v) {
        if (!row.is_array() || row.empty() || row.size() > 4) return false;
        for (const auto& cell : row)
            if (!cell.is_primitive()) return false;
    }
    return true;
}

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_rows(std::ostringstream& out, const json& rows, const std::string& indent) {
    std::vector<std::vector<std::string>> table;
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        std::vector<std::string> r;
        for (const auto& cell : row) r.push_back(cell_text(cell));
        if (r.size() > width.size()) width.resize(r.size(), 0);
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        table.push_back(std::move(r));
    }
    for (const auto& r : table) {
        out << indent;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) out << "  ";
            out << std::string(width[c] - r[c].size(), ' ') << r[c];
        }
        out << "\n";
    }
}

void render_value(std::ostringstream& out, const std::string& key, const json& v,
                  const std::string& indent) {
    if (v.is_object()) {
        out << indent << key << ":\n";
        for (const auto& [k2, v2] : v.items()) render_value(out, k2, v2, indent + "  ");
    } else if (is_scalar_triple_array(v)) {
        out << indent << key << ":\n";
        render_rows(out, v, indent + "  ");
    } else if (v.is_array()) {
        out << indent << key << ": " << v.dump() << "\n";
    } else {
        out << indent << key << ": " << cell_text(v) << "\n";
    }
}

}  // namespace

std::string render_table(const json& doc) {
    std::ostringstream out;
    // stable header line, then sorted keys
    if (doc.contains("kind")) out << "== " << cell_text(doc["kind"]);
    if (doc.contains("task")) out << " [" << cell_text(doc["task"]) << "]";
    out << " ==\n";
    for (const auto& [k, v] : doc.items()) {
        if (k == "kind" || k == "task") continue;
        render_value(out, k, v, "");
    }
    return out.str();
}

}  // namespace grakit
