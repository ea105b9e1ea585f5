#include "grakit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grakit {

const GradedRingPresentation* SessionIR::find_ring(const std::string& name) const {
    for (const auto& [n, r] : rings)
        if (n == name) return &r;
    return nullptr;
}

const NamedModule* SessionIR::find_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return &m;
    return nullptr;
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        cur_ = {Tok::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            cur_ = {Tok::Ident, text_.substr(start, pos_ - start), line_, col_};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_ = {Tok::Int, text_.substr(start, pos_ - start), line_, col_};
        } else {
            cur_ = {Tok::Punct, std::string(1, c), line_, col_};
            ++pos_;
        }
        col_ += static_cast<int>(cur_.text.size());
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw input_error("line " + std::to_string(at.line) + ", col " + std::to_string(at.col) +
                      ": " + msg);
}

class Parser {
public:
    Parser(const std::string& text, const Budget* budget) : lex_(text), budget_(budget) {}

    SessionIR parse() {
        while (lex_.peek().kind != Tok::End) {
            Token t = lex_.peek();
            if (t.kind != Tok::Ident) fail(t, "expected 'ring', 'module' or 'task'");
            if (t.text == "ring")
                ring_decl();
            else if (t.text == "module")
                module_decl();
            else if (t.text == "task")
                task_decl();
            else
                fail(t, "expected 'ring', 'module' or 'task', got '" + t.text + "'");
        }
        finalize();
        return std::move(ir_);
    }

private:
    Token expect_ident() {
        Token t = lex_.take();
        if (t.kind != Tok::Ident) fail(t, "expected identifier, got '" + t.text + "'");
        return t;
    }
    Token expect_int() {
        Token t = lex_.take();
        if (t.kind != Tok::Int) fail(t, "expected integer, got '" + t.text + "'");
        return t;
    }
    void expect_punct(const char* p) {
        Token t = lex_.take();
        if (t.kind != Tok::Punct || t.text != p)
            fail(t, std::string("expected '") + p + "', got '" + t.text + "'");
    }
    void expect_keyword(const char* kw) {
        Token t = lex_.take();
        if (t.kind != Tok::Ident || t.text != kw)
            fail(t, std::string("expected '") + kw + "', got '" + t.text + "'");
    }
    bool at_punct(const char* p) const {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }

    long long parse_int_value(const Token& t) {
        try {
            return std::stoll(t.text);
        } catch (const std::exception&) {
            fail(t, "integer literal out of range");
        }
    }

    // Names are checked against rings, modules and variables alike so a
    // later declaration can never shadow an earlier one.
    void check_fresh_name(const Token& t) {
        if (ir_.find_ring(t.text) || ir_.find_module(t.text))
            fail(t, "name '" + t.text + "' already declared");
    }

    void ring_decl() {
        lex_.take();  // ring
        Token name = expect_ident();
        check_fresh_name(name);
        expect_punct("{");

        expect_keyword("char");
        expect_punct("=");
        Token pt = expect_int();
        long long p = parse_int_value(pt);
        if (p < 3 || p > 0x7fffffff || !is_prime(static_cast<std::uint32_t>(p)))
            fail(pt, "characteristic must be an odd prime");
        expect_punct(";");

        expect_keyword("vars");
        expect_punct("=");
        expect_punct("[");
        std::vector<std::string> var_names;
        std::vector<int> weights;
        while (true) {
            Token v = expect_ident();
            if (std::find(var_names.begin(), var_names.end(), v.text) != var_names.end())
                fail(v, "duplicate variable '" + v.text + "'");
            expect_punct(":");
            Token wt = expect_int();
            long long w = parse_int_value(wt);
            if (w < 1) fail(wt, "variable weight must be >= 1");
            var_names.push_back(v.text);
            weights.push_back(static_cast<int>(w));
            if (at_punct(",")) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_punct("]");
        expect_punct(";");
        PolyContext ctx(static_cast<std::uint32_t>(p), weights);

        expect_keyword("ideal");
        expect_punct("=");
        expect_punct("[");
        std::vector<Polynomial> gens;
        std::vector<Token> gen_pos;
        if (!at_punct("]")) {
            while (true) {
                Token start = lex_.peek();
                gens.push_back(parse_poly(ctx, var_names));
                gen_pos.push_back(start);
                if (at_punct(",")) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        expect_punct("]");
        expect_punct(";");
        expect_punct("}");

        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::optional<long long> deg;
            try {
                deg = poly_degree_if_homogeneous(ctx, gens[g]);
            } catch (const input_error&) {
                fail(gen_pos[g], "ideal generator " + std::to_string(g + 1) + " is inhomogeneous");
            }
            if (!deg) fail(gen_pos[g], "ideal generator " + std::to_string(g + 1) + " is zero");
            if (*deg < 2)
                fail(gen_pos[g],
                     "ideal generator " + std::to_string(g + 1) + " has degree < 2");
            for (const auto& t : gens[g].terms)
                if (total_degree(t.mon) == 1)
                    fail(gen_pos[g], "ideal generator " + std::to_string(g + 1) +
                                         " contains a bare-variable monomial "
                                         "(presentation is not minimal)");
        }
        std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
            return poly_compare(ctx, a, b) < 0;
        });
        ir_.rings.push_back({name.text, make_ring(ctx, var_names, gens)});
    }

    void module_decl() {
        lex_.take();  // module
        Token name = expect_ident();
        check_fresh_name(name);
        expect_keyword("over");
        Token ring_name = expect_ident();
        const GradedRingPresentation* R = ir_.find_ring(ring_name.text);
        if (!R) fail(ring_name, "undeclared ring '" + ring_name.text + "'");
        expect_punct("{");

        expect_keyword("gens");
        expect_punct("=");
        expect_punct("[");
        FreeModule cover;
        while (true) {
            Token dt = expect_int();
            cover.gen_degrees.push_back(static_cast<int>(parse_int_value(dt)));
            if (at_punct(",")) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_punct("]");
        expect_punct(";");

        expect_keyword("rels");
        expect_punct("=");
        expect_punct("[");
        std::vector<FreeElement> rels;
        if (!at_punct("]")) {
            while (true) {
                Token start = lex_.peek();
                expect_punct("[");
                FreeElement col;
                while (true) {
                    col.entries.push_back(parse_poly(R->ctx, R->var_names));
                    if (at_punct(",")) {
                        lex_.take();
                        continue;
                    }
                    break;
                }
                expect_punct("]");
                if (static_cast<int>(col.entries.size()) != cover.rank())
                    fail(start, "relation column has " + std::to_string(col.entries.size()) +
                                    " entries, expected " + std::to_string(cover.rank()));
                try {
                    fe_degree_if_homogeneous(R->ctx, cover, col);
                } catch (const input_error&) {
                    fail(start, "relation column is inhomogeneous");
                }
                rels.push_back(std::move(col));
                if (at_punct(",")) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        expect_punct("]");
        expect_punct(";");
        expect_punct("}");

        GradedModulePresentation pres{cover, rels};
        pres = minimalize_presentation(*R, std::move(pres), budget_);
        sort_relations(R->ctx, pres);
        ir_.modules.push_back({name.text, NamedModule{ring_name.text, std::move(pres)}});
    }

    void task_decl() {
        lex_.take();  // task
        Token name = expect_ident();
        for (const auto& t : ir_.tasks)
            if (t.name == name.text) fail(name, "task '" + name.text + "' already declared");
        expect_punct("{");
        TaskSpec spec;
        spec.name = name.text;
        Token open = name;
        while (!at_punct("}")) {
            Token key = expect_ident();
            std::string key_text = dashed_tail(key.text);
            expect_punct("=");
            std::string value = parse_value();
            expect_punct(";");
            if (key_text == "kind") {
                if (!spec.kind.empty()) fail(key, "duplicate parameter 'kind'");
                spec.kind = value;
            } else {
                if (spec.find(key_text)) fail(key, "duplicate parameter '" + key_text + "'");
                spec.params.push_back({key_text, value});
            }
        }
        expect_punct("}");
        if (spec.kind.empty()) fail(open, "task '" + spec.name + "' is missing 'kind'");
        validate_task(spec, open);
        std::sort(spec.params.begin(), spec.params.end());
        ir_.tasks.push_back(std::move(spec));
    }

    // IDENT ('-' (IDENT | INT))*, joined; covers kinds like verify-main1.
    std::string dashed_tail(std::string head) {
        while (at_punct("-")) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Tok::Ident && t.kind != Tok::Int)
                fail(t, "expected identifier after '-'");
            head += "-" + t.text;
        }
        return head;
    }

    std::string parse_value() {
        Token t = lex_.take();
        if (t.kind == Tok::Int) return t.text;
        if (t.kind == Tok::Ident) return dashed_tail(t.text);
        if (t.kind == Tok::Punct && t.text == "[") {
            std::string out = "[";
            while (true) {
                Token v = expect_int();
                out += v.text;
                if (at_punct(",")) {
                    lex_.take();
                    out += ",";
                    continue;
                }
                break;
            }
            expect_punct("]");
            return out + "]";
        }
        fail(t, "expected a value (integer, name or integer list)");
    }

    Polynomial parse_poly(const PolyContext& ctx, const std::vector<std::string>& var_names) {
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            long long sign = 1;
            if (at_punct("-")) {
                lex_.take();
                sign = -1;
            } else if (at_punct("+")) {
                if (first) fail(lex_.peek(), "expected a term");
                lex_.take();
            } else if (!first) {
                break;
            }
            terms.push_back(parse_term(ctx, var_names, sign));
            first = false;
        }
        return poly_from_terms(ctx, std::move(terms));
    }

    Term parse_term(const PolyContext& ctx, const std::vector<std::string>& var_names,
                    long long sign) {
        long long coeff = 1;
        Monomial mon(ctx.nvars(), 0);
        bool any = false;
        Token t = lex_.peek();
        if (t.kind == Tok::Int) {
            lex_.take();
            coeff = parse_int_value(t);
            any = true;
            if (at_punct("*")) {
                lex_.take();
                parse_mon_factor(ctx, var_names, mon);
                while (at_punct("*")) {
                    lex_.take();
                    parse_mon_factor(ctx, var_names, mon);
                }
            }
        } else if (t.kind == Tok::Ident) {
            parse_mon_factor(ctx, var_names, mon);
            any = true;
            while (at_punct("*")) {
                lex_.take();
                parse_mon_factor(ctx, var_names, mon);
            }
        }
        if (!any) fail(t, "expected a term");
        return Term{ctx.field.from_int(sign * coeff), std::move(mon)};
    }

    void parse_mon_factor(const PolyContext& ctx, const std::vector<std::string>& var_names,
                          Monomial& mon) {
        Token v = expect_ident();
        auto it = std::find(var_names.begin(), var_names.end(), v.text);
        if (it == var_names.end()) fail(v, "unknown variable '" + v.text + "'");
        long long exp = 1;
        if (at_punct("^")) {
            lex_.take();
            Token e = expect_int();
            exp = parse_int_value(e);
            if (exp < 1) fail(e, "exponent must be >= 1");
        }
        mon[it - var_names.begin()] += static_cast<std::uint32_t>(exp);
    }

    static bool is_int_text(const std::string& v) {
        return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    }

    void require_int(const TaskSpec& spec, const Token& at, const std::string& key,
                     long long min_value) {
        const std::string* v = spec.find(key);
        if (!v) fail(at, "task '" + spec.name + "' (" + spec.kind + ") is missing '" + key + "'");
        if (!is_int_text(*v) || std::stoll(*v) < min_value)
            fail(at, "task '" + spec.name + "': parameter '" + key + "' must be an integer >= " +
                         std::to_string(min_value));
    }

    void require_list(const TaskSpec& spec, const Token& at, const std::string& key) {
        const std::string* v = spec.find(key);
        if (!v || v->empty() || v->front() != '[')
            fail(at, "task '" + spec.name + "': parameter '" + key +
                         "' must be a non-empty integer list");
    }

    void require_ring(const TaskSpec& spec, const Token& at) {
        const std::string* v = spec.find("ring");
        if (!v) fail(at, "task '" + spec.name + "' is missing 'ring'");
        if (!ir_.find_ring(*v)) fail(at, "task '" + spec.name + "': undeclared ring '" + *v + "'");
    }

    // 'k' and 'm' are built-in module names (residue field, maximal ideal).
    void require_module(const TaskSpec& spec, const Token& at) {
        const std::string* v = spec.find("module");
        if (!v) fail(at, "task '" + spec.name + "' is missing 'module'");
        if (*v == "k" || *v == "m") return;
        const std::string* r = spec.find("ring");
        if (r && *v == *r) return;  // the ring as a module over itself
        const NamedModule* mod = ir_.find_module(*v);
        if (!mod) fail(at, "task '" + spec.name + "': undeclared module '" + *v + "'");
        if (r && mod->ring != *r)
            fail(at, "task '" + spec.name + "': module '" + *v + "' is over ring '" + mod->ring +
                         "', not '" + *r + "'");
    }

    void validate_task(const TaskSpec& spec, const Token& at) {
        const std::string& k = spec.kind;
        std::set<std::string> allowed;
        if (k == "betti" || k == "poincare" || k == "regularity") {
            require_ring(spec, at);
            require_module(spec, at);
            require_int(spec, at, "T", 0);
            allowed = {"ring", "module", "T"};
        } else if (k == "hilbert") {
            require_ring(spec, at);
            require_int(spec, at, "T", 0);
            allowed = {"ring", "T"};
        } else if (k == "koszul" || k == "deviations") {
            require_ring(spec, at);
            require_int(spec, at, "T", 1);
            allowed = {"ring", "T"};
        } else if (k == "ci") {
            require_ring(spec, at);
            allowed = {"ring"};
        } else if (k == "verify-main1") {
            require_ring(spec, at);
            require_module(spec, at);
            require_int(spec, at, "i", 1);
            require_int(spec, at, "T", 1);
            allowed = {"ring", "module", "i", "T"};
        } else if (k == "verify-main2") {
            require_ring(spec, at);
            require_int(spec, at, "m", 1);
            require_int(spec, at, "n", 0);
            require_int(spec, at, "T", 1);
            allowed = {"ring", "m", "n", "T"};
        } else if (k == "reg-growth") {
            require_ring(spec, at);
            require_int(spec, at, "n", 0);
            require_list(spec, at, "samples");
            allowed = {"ring", "n", "samples"};
        } else if (k == "explore") {
            require_int(spec, at, "vars", 1);
            require_int(spec, at, "maxdeg", 1);
            require_list(spec, at, "weights");
            require_int(spec, at, "T", 1);
            allowed = {"vars", "maxdeg", "weights", "T", "count"};
        } else {
            fail(at, "unknown task kind '" + k + "'");
        }
        for (const auto& [key, value] : spec.params)
            if (!allowed.count(key))
                fail(at, "task '" + spec.name + "' (" + k + "): unexpected parameter '" + key +
                             "'");
    }

    void finalize() {
        std::stable_sort(ir_.rings.begin(), ir_.rings.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::stable_sort(ir_.modules.begin(), ir_.modules.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    static void sort_relations(const PolyContext& ctx, GradedModulePresentation& pres) {
        std::sort(pres.relations.begin(), pres.relations.end(),
                  [&](const FreeElement& a, const FreeElement& b) {
                      for (std::size_t e = 0; e < a.entries.size(); ++e) {
                          int c = poly_compare(ctx, a.entries[e], b.entries[e]);
                          if (c != 0) return c < 0;
                      }
                      return false;
                  });
    }

    Lexer lex_;
    const Budget* budget_;
    SessionIR ir_;
};

}  // namespace

SessionIR parse_session(const std::string& text, const Budget* budget) {
    Parser p(text, budget);
    return p.parse();
}

}  // namespace grakit
