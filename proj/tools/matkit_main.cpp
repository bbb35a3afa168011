// Command-line front end: catalog dumps, pool generation, minor queries and
// the claim verifier. See README.md for the document formats.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matkit/canonical.hpp"
#include "matkit/catalog.hpp"
#include "matkit/json_io.hpp"
#include "matkit/minor.hpp"
#include "matkit/verifier.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw matkit::BadParameters("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw matkit::BadParameters("cannot write " + path);
    return file;
}

matkit::Matroid load_matroid_arg(const std::string& arg) {
    if (matkit::is_catalog_name(arg)) return matkit::catalog_matroid(arg);
    return matkit::matroid_from_json(read_file(arg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matkit - matroid kernel and verification tool"};
    app.require_subcommand(1);

    // cat ------------------------------------------------------------------
    std::string cat_name, cat_out;
    bool cat_list = false;
    auto* cat = app.add_subcommand("cat", "emit a catalog matroid as JSON");
    cat->add_option("name", cat_name, "catalog name (see --list)");
    cat->add_flag("--list", cat_list, "list catalog names");
    cat->add_option("-o,--out", cat_out, "output path (default stdout)");

    // pool -----------------------------------------------------------------
    std::string pool_spec_path, pool_out;
    auto* pool = app.add_subcommand("pool", "generate an instance pool (JSON lines)");
    pool->add_option("spec", pool_spec_path, "pool spec JSON file")->required();
    pool->add_option("-o,--out", pool_out, "output path (default stdout)");

    // minor ----------------------------------------------------------------
    std::string minor_host, minor_pattern, minor_use;
    std::uint64_t minor_budget = matkit::kDefaultSearchBudget;
    auto* minor = app.add_subcommand("minor", "isomorphic-minor query");
    minor->add_option("--host", minor_host, "host matroid JSON file or catalog name")
        ->required();
    minor->add_option("--pattern", minor_pattern, "pattern catalog name or JSON file")
        ->required();
    minor->add_option("--use", minor_use, "comma-separated host labels the minor must use");
    minor->add_option("--budget", minor_budget, "search node budget");

    // verify -----------------------------------------------------------------
    std::string verify_claim, verify_pool_path, verify_report_path;
    std::uint64_t verify_budget = matkit::kDefaultSearchBudget;
    int verify_jobs = 1;
    int verify_min_nonvacuous = -1;
    auto* verify = app.add_subcommand("verify", "replay a claim over a pool");
    verify->add_option("claim", verify_claim,
                       "thm-1|thm-main|lem-2.1|lem-2.2|lem-2.3|lem-3.1|lem-4.1|"
                       "lem-5.3|lem-5.4|lem-5.5|lem-5.6|lem-5.8|prop-5.9|all")
        ->required();
    verify->add_option("--pool", verify_pool_path, "pool spec JSON file")->required();
    verify->add_option("--report", verify_report_path, "JSON-lines report path");
    verify->add_option("--budget", verify_budget, "search node budget");
    verify->add_option("--jobs", verify_jobs, "worker threads per claim");
    verify->add_option("--min-nonvacuous", verify_min_nonvacuous,
                       "required non-vacuous instances per claim (default 3; "
                       "lem-5.6 defaults to 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat) {
            if (cat_list) {
                for (const auto& n : matkit::catalog_names()) std::cout << n << "\n";
                return 0;
            }
            if (cat_name.empty()) {
                std::cerr << "cat: missing name (try --list)\n";
                return 2;
            }
            std::ofstream file;
            auto& out = open_out(file, cat_out);
            out << matkit::matroid_to_json(matkit::catalog_matroid(cat_name), cat_name)
                << "\n";
            return 0;
        }

        if (*pool) {
            auto spec = matkit::pool_spec_from_json(read_file(pool_spec_path));
            auto entries = matkit::generate_pool(spec);
            std::ofstream file;
            auto& out = open_out(file, pool_out);
            for (const auto& e : entries) out << matkit::pool_entry_to_json(e) << "\n";
            std::cerr << "pool: " << entries.size() << " matroids\n";
            return 0;
        }

        if (*minor) {
            matkit::Matroid host = load_matroid_arg(minor_host);
            matkit::Matroid pattern = load_matroid_arg(minor_pattern);
            matkit::Mask use = 0;
            if (!minor_use.empty()) {
                std::stringstream ss(minor_use);
                std::string label;
                while (std::getline(ss, label, ','))
                    use |= matkit::bit(host.ground().position(label));
            }
            auto res = matkit::has_minor_using({host, pattern, use, minor_budget});
            if (res.status == matkit::SearchStatus::present) {
                const auto& w = *res.witness;
                std::cout << "present\ncontract:";
                for (const auto& l : w.contracted) std::cout << " " << l;
                std::cout << "\ndelete:";
                for (const auto& l : w.deleted) std::cout << " " << l;
                std::cout << "\nmap:";
                for (const auto& [from, to] : w.map)
                    std::cout << " " << from << "->" << to;
                std::cout << "\n";
                return 0;
            }
            if (res.status == matkit::SearchStatus::absent) {
                std::cout << "absent\n";
                return 1;
            }
            std::cout << "budget exceeded\n";
            return 2;
        }

        if (*verify) {
            auto spec = matkit::pool_spec_from_json(read_file(verify_pool_path));
            auto entries = matkit::generate_pool(spec);
            std::cerr << "pool: " << entries.size() << " matroids\n";

            matkit::VerifierConfig cfg;
            cfg.budget = verify_budget;
            cfg.jobs = verify_jobs;
            cfg.min_nonvacuous["lem-5.6"] = 0;
            if (verify_min_nonvacuous >= 0)
                cfg.default_min_nonvacuous = verify_min_nonvacuous;

            std::ofstream file;
            auto& out = open_out(file, verify_report_path);

            if (verify_claim == "all") {
                auto summary = matkit::run_all(entries, cfg);
                for (const auto& r : summary.reports)
                    out << matkit::report_to_json(r) << "\n";
                for (const auto& c : summary.claims)
                    std::cerr << c.claim << ": pass=" << c.pass << " fail=" << c.fail
                              << " vacuous=" << c.vacuous << " budget=" << c.budget
                              << (c.coverage_ok ? "" : " [insufficient coverage]")
                              << "\n";
                return summary.exit_code;
            }

            auto reports = matkit::run_claim(verify_claim, entries, cfg);
            int pass = 0, fail = 0, vac = 0, budget = 0;
            for (const auto& r : reports) {
                out << matkit::report_to_json(r) << "\n";
                switch (r.verdict) {
                    case matkit::Verdict::pass: ++pass; break;
                    case matkit::Verdict::fail: ++fail; break;
                    case matkit::Verdict::vacuous: ++vac; break;
                    case matkit::Verdict::budget: ++budget; break;
                }
            }
            std::cerr << verify_claim << ": pass=" << pass << " fail=" << fail
                      << " vacuous=" << vac << " budget=" << budget << "\n";
            int required = verify_min_nonvacuous >= 0 ? verify_min_nonvacuous
                           : verify_claim == "lem-5.6" ? 0
                                                       : cfg.default_min_nonvacuous;
            if (fail) return 1;
            if (budget) return 2;
            if (pass + fail + budget < required) return 3;
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    }
    return 0;
}
