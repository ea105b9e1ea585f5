#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "grakit/explore.hpp"
#include "grakit/report.hpp"
#include "grakit/session.hpp"

namespace {

// exit codes: 0 holds/success, 1 fails-style verdict, 2 input error,
// 3 resource exhaustion
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw grakit::input_error("cannot open session file " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::app);
    if (!out) throw grakit::input_error("cannot open output file " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-ring toolkit: resolutions, series and inequality checks"};
    app.require_subcommand(1);

    std::string session_path, task_name, out_path, format = "table";
    int jobs = 1;
    double budget_sec = 60.0;
    long long budget_entries = 1000000;
    bool no_cache = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "append reports to this file instead of stdout");
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--jobs", jobs, "parallel workers for batch work")->check(CLI::Range(1, 64));
        cmd->add_option("--budget-sec", budget_sec, "wall clock budget per task (seconds)");
        cmd->add_option("--budget-entries", budget_entries, "matrix entry budget per task");
        cmd->add_flag("--no-cache", no_cache, "bypass the result cache");
    };

    CLI::App* run = app.add_subcommand("run", "run tasks from a session file");
    run->add_option("--session", session_path, "session file")->required();
    run->add_option("--task", task_name, "run only the named task");
    add_common(run);

    int ex_vars = 2, ex_maxdeg = 3, ex_maxh = 6;
    std::vector<int> ex_weights;
    long long ex_count = 0;
    CLI::App* explore = app.add_subcommand("explore", "batch-probe a monomial ideal family");
    explore->add_option("--vars", ex_vars, "number of variables (1..4)")->required();
    explore->add_option("--max-gen-deg", ex_maxdeg, "max generator degree (2..5)")->required();
    explore->add_option("--weights", ex_weights, "variable weights")->required()->expected(1, 4);
    explore->add_option("--maxh", ex_maxh, "deviation/Koszul bound T")->required();
    explore->add_option("--count", ex_count, "cap on the number of rings");
    add_common(explore);

    CLI::App* cache_cmd = app.add_subcommand("cache", "cache maintenance");
    double gc_age = -1.0;
    long long gc_bytes = -1;
    CLI::App* gc = cache_cmd->add_subcommand("gc", "drop stale or excess entries");
    gc->add_option("--max-age", gc_age, "drop entries older than this many days");
    gc->add_option("--max-bytes", gc_bytes, "total size cap in bytes");

    CLI11_PARSE(app, argc, argv);

    try {
        grakit::Budget budget = grakit::Budget::of(budget_sec, budget_entries);
        grakit::Cache cache(grakit::Cache::default_root());
        const grakit::Cache* cache_ptr = no_cache ? nullptr : &cache;
        bool json_format = (format == "json");

        if (run->parsed()) {
            grakit::SessionIR s = grakit::parse_session(read_file(session_path), &budget);
            int worst = 0;
            bool matched = false;
            for (const auto& t : s.tasks) {
                if (!task_name.empty() && t.name != task_name) continue;
                matched = true;
                grakit::TaskResult r = grakit::run_task(s, t, cache_ptr, &budget, jobs);
                emit(json_format ? grakit::render_json(r.doc, true)
                                 : grakit::render_table(r.doc),
                     out_path);
                worst = std::max(worst, r.exit_code);
            }
            if (!task_name.empty() && !matched)
                throw grakit::input_error("no task named '" + task_name + "' in session");
            return worst;
        }

        if (explore->parsed()) {
            grakit::ExploreParams p;
            p.vars = ex_vars;
            p.max_gen_deg = ex_maxdeg;
            p.weights = ex_weights;
            p.t_bound = ex_maxh;
            if (ex_count > 0) p.count_cap = ex_count;
            nlohmann::json corpus = grakit::explore_batch(p, cache_ptr, &budget, jobs);
            nlohmann::json doc = std::move(corpus);
            doc["schema_version"] = grakit::kSchemaVersion;
            doc["meta"]["tool_version"] = grakit::kToolVersion;
            emit(json_format ? grakit::render_json(doc, true) : grakit::render_table(doc),
                 out_path);
            return doc.value("complete", true) ? 0 : kExitResource;
        }

        if (gc->parsed()) {
            auto summary =
                cache.gc(gc_age >= 0 ? std::optional<double>(gc_age) : std::nullopt,
                         gc_bytes >= 0 ? std::optional<std::uintmax_t>(gc_bytes) : std::nullopt);
            std::cout << "removed: " << summary.removed << "\nkept: " << summary.kept << "\n";
            for (const auto& e : summary.errors) std::cerr << "gc: " << e << "\n";
            return 0;
        }
        std::cerr << "cache: expected a subcommand (gc)\n";
        return kExitInput;
    } catch (const grakit::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const grakit::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitInput;
    } catch (const grakit::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const grakit::incomplete_basis_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}
