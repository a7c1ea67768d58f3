#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lapmult/canonical.hpp"
#include "lapmult/errors.hpp"
#include "lapmult/report.hpp"

namespace {

using lapmult::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;

struct InputItem {
    json descriptor;
    lapmult::Graph graph;
};

std::vector<InputItem> load_inputs(const std::string& graph6, const std::string& file,
                                   const std::vector<std::string>& family_spec) {
    const int sources = !graph6.empty() + !file.empty() + !family_spec.empty();
    if (sources != 1)
        throw std::invalid_argument("exactly one of --graph6, --file, --family is required");

    std::vector<InputItem> items;
    if (!graph6.empty()) {
        items.push_back({json{{"graph6", graph6}}, lapmult::from_graph6(graph6)});
    } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                items.push_back(
                    {json{{"file", file}, {"line", lineno}, {"graph6", line}},
                     lapmult::from_graph6(line)});
            } catch (const lapmult::ParseError& e) {
                throw std::invalid_argument(file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (items.empty()) throw std::invalid_argument("file has no graphs: " + file);
    } else {
        const std::string& name = family_spec.front();
        std::vector<int> params;
        for (std::size_t i = 1; i < family_spec.size(); ++i) {
            try {
                std::size_t used = 0;
                params.push_back(std::stoi(family_spec[i], &used));
                if (used != family_spec[i].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("family parameter is not an integer: " +
                                            family_spec[i]);
            }
        }
        items.push_back(
            {json{{"family", name}, {"params", params}}, lapmult::family(name, params)});
    }
    return items;
}

json combine(std::vector<json> results) {
    if (results.size() == 1) return std::move(results.front());
    return json(std::move(results));
}

std::string spectrum_verdict(const json& r) {
    std::string line = "spectrum:";
    for (const auto& pair : r["integer_eigenvalues"])
        line += " [" + pair[0].dump() + "]^" + pair[1].dump();
    if (!r["residual"].is_null()) {
        line += " residual";
        for (const auto& c : r["residual"]) line += " " + c.get<std::string>();
    }
    return line;
}

std::string classify_verdict(const json& r) {
    std::string line = "class=" + r["class"].get<std::string>() +
                       " k_max=" + r["k_max"].dump();
    if (!r["matched_family"].is_null()) {
        line += " matched=" + r["matched_family"]["family"].get<std::string>() + "(";
        bool first = true;
        for (const auto& p : r["matched_family"]["params"]) {
            if (!first) line += ",";
            line += p.dump();
            first = false;
        }
        line += ")";
    }
    return line;
}

void emit(const json& doc, bool quiet, const std::string& verdict) {
    if (quiet)
        std::cout << verdict << "\n";
    else
        std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacian spectrum multiplicity toolkit"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print only the verdict line");

    std::string graph6, file;
    std::vector<std::string> family_spec;

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "exact Laplacian spectrum");
    CLI::App* cmd_classify = app.add_subcommand("classify", "multiplicity class report");
    for (CLI::App* cmd : {cmd_spectrum, cmd_classify}) {
        cmd->add_option("--graph6", graph6, "graph6 string");
        cmd->add_option("--file", file, "file with one graph6 string per line");
        cmd->add_option("--family", family_spec, "family name followed by its parameters")
            ->expected(-1);
    }
    bool literal = false;
    cmd_classify->add_flag("--literal-predicate", literal,
                           "use the literal some-eigenvalue-has-multiplicity-k predicate");

    int cat_n = 0, cat_k = 0;
    CLI::App* cmd_catalog = app.add_subcommand("catalog", "known membership list for (n, k)");
    cmd_catalog->add_option("--n", cat_n, "graph order")->required();
    cmd_catalog->add_option("--k", cat_k, "multiplicity")->required();

    int ver_n = 0, jobs = 1;
    bool skip_dls = false, stretch_n9 = false, ver_literal = false;
    std::string cache;
    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive verification at order n");
    cmd_verify->add_option("--n", ver_n, "graph order (4..9)")->required();
    cmd_verify->add_flag("--skip-dls", skip_dls, "skip the spectrum-bucket check");
    cmd_verify->add_flag("--stretch-n9", stretch_n9, "allow the order-9 stretch run");
    cmd_verify->add_option("--jobs", jobs, "enumeration worker count");
    cmd_verify->add_option("--cache", cache, "directory for enumeration cache files");
    cmd_verify->add_flag("--literal-predicate", ver_literal,
                         "use the literal some-eigenvalue-has-multiplicity-k predicate");

    CLI::App* cmd_families = app.add_subcommand("families", "list named graph families");

    // Global flags remain usable after subcommand arguments.
    for (CLI::App* cmd : {cmd_spectrum, cmd_classify, cmd_catalog, cmd_verify, cmd_families})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (cmd_spectrum->parsed()) {
            std::vector<InputItem> items = load_inputs(graph6, file, family_spec);
            std::vector<json> results, inputs;
            std::string verdict;
            for (const InputItem& item : items) {
                results.push_back(lapmult::spectrum_report(item.graph));
                inputs.push_back(item.descriptor);
                if (!verdict.empty()) verdict += "\n";
                verdict += spectrum_verdict(results.back());
            }
            emit(lapmult::envelope("spectrum", combine(std::move(inputs)),
                                   combine(std::move(results)), elapsed_ms()),
                 quiet, verdict);
            return kExitOk;
        }
        if (cmd_classify->parsed()) {
            const auto pred = literal ? lapmult::MultiplicityPredicate::Literal
                                      : lapmult::MultiplicityPredicate::MaxMultiplicity;
            std::vector<InputItem> items = load_inputs(graph6, file, family_spec);
            std::vector<json> results, inputs;
            std::string verdict;
            for (const InputItem& item : items) {
                results.push_back(lapmult::classification_json(lapmult::classify(item.graph, pred)));
                inputs.push_back(item.descriptor);
                if (!verdict.empty()) verdict += "\n";
                verdict += classify_verdict(results.back());
            }
            emit(lapmult::envelope("classify", combine(std::move(inputs)),
                                   combine(std::move(results)), elapsed_ms()),
                 quiet, verdict);
            return kExitOk;
        }
        if (cmd_catalog->parsed()) {
            const json result = lapmult::catalog_json(cat_n, cat_k);
            bool all_match = true;
            for (const auto& e : result["entries"]) all_match &= e["match"].get<bool>();
            emit(lapmult::envelope("catalog", json{{"n", cat_n}, {"k", cat_k}}, result,
                                   elapsed_ms()),
                 quiet,
                 "entries=" + std::to_string(result["entries"].size()) +
                     " all_match=" + (all_match ? "true" : "false"));
            return all_match ? kExitOk : kExitVerificationFailed;
        }
        if (cmd_verify->parsed()) {
            lapmult::VerifyOptions opts;
            opts.jobs = jobs;
            opts.skip_dls = skip_dls;
            opts.allow_order9 = stretch_n9;
            opts.predicate = ver_literal ? lapmult::MultiplicityPredicate::Literal
                                         : lapmult::MultiplicityPredicate::MaxMultiplicity;
            if (!cache.empty()) {
                opts.cache_dir = cache;
            } else if (const char* env = std::getenv("LAPMULT_CACHE_DIR")) {
                opts.cache_dir = env;
            }
            const lapmult::EnumerationSummary summary = lapmult::verify_theorem(ver_n, opts);
            const bool ok = summary.set_equal && summary.dls_violations.empty() &&
                            summary.lemma_violations.empty();
            emit(lapmult::envelope("verify", json{{"n", ver_n}}, lapmult::summary_json(summary),
                                   elapsed_ms()),
                 quiet,
                 std::string("set_equal=") + (summary.set_equal ? "true" : "false") +
                     " dls_violations=" + std::to_string(summary.dls_violations.size()) +
                     " lemma_violations=" + std::to_string(summary.lemma_violations.size()));
            return ok ? kExitOk : kExitVerificationFailed;
        }
        if (cmd_families->parsed()) {
            const json result = lapmult::families_json();
            std::string verdict;
            for (const auto& f : result) {
                if (!verdict.empty()) verdict += "\n";
                verdict += f["name"].get<std::string>();
            }
            emit(lapmult::envelope("families", json(nullptr), result, elapsed_ms()), quiet,
                 verdict);
            return kExitOk;
        }
    } catch (const lapmult::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const lapmult::LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitLimit;
    }
    return kExitOk;
}
