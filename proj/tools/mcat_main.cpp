#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "mcat/bounds.hpp"
#include "mcat/concat.hpp"
#include "mcat/io.hpp"
#include "mcat/transform.hpp"
#include "mcat/unary.hpp"
#include "mcat/verify.hpp"
#include "mcat/witness.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct ReportOptions {
    std::string out;
    std::string format = "csv";
    bool timings = false;
};

int emit_report(const mcat::verify::Report& rep, const ReportOptions& opt) {
    if (!opt.out.empty()) {
        std::ofstream csv(opt.out + ".csv");
        csv << rep.to_csv();
        std::ofstream js(opt.out + ".json");
        js << rep.to_json();
    }
    std::cout << (opt.format == "json" ? rep.to_json() : rep.to_csv());
    return rep.exit_code();
}

std::vector<mcat::bounds::SizeVector> grid_vectors(const std::vector<int>& ks,
                                                   const std::vector<int>& nvals) {
    std::vector<mcat::bounds::SizeVector> out;
    for (int k : ks) {
        std::vector<size_t> idx(static_cast<size_t>(k), 0);
        for (;;) {
            mcat::bounds::SizeVector n;
            for (size_t i = 0; i < idx.size(); ++i)
                n.n.push_back(nvals[idx[i]]);
            out.push_back(n);
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == nvals.size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-automata workbench for multiple concatenation"};
    app.require_subcommand(1);

    size_t cap = mcat::kDefaultCap;
    int jobs = 0;
    app.add_option("--cap", cap, "determinization cap (reachable subsets)");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");

    // ---- bound ----
    auto* cmd_bound = app.add_subcommand("bound", "valid-state counting formulas");
    std::string bound_n;
    bool bound_closed_k3 = false, bound_enum = false;
    cmd_bound->add_option("--n", bound_n, "size vector, e.g. 3,4,3")->required();
    cmd_bound->add_flag("--closed-k3", bound_closed_k3, "also evaluate the k=3 closed form");
    cmd_bound->add_flag("--enumerate", bound_enum, "also run the brute-force enumeration");

    // ---- witness ----
    auto* cmd_witness = app.add_subcommand("witness", "emit a witness family instance");
    std::string wit_family, wit_n, wit_out = ".", wit_format = "text";
    cmd_witness->add_option("--family", wit_family, "family name")->required();
    cmd_witness->add_option("--n", wit_n, "size vector")->required();
    cmd_witness->add_option("--out", wit_out, "output directory");
    cmd_witness->add_option("--format", wit_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- concat ----
    auto* cmd_concat = app.add_subcommand("concat", "concatenate automaton files");
    std::vector<std::string> concat_files;
    std::string concat_labels, concat_min_out;
    bool concat_eps = false;
    cmd_concat->add_option("files", concat_files, "automaton files in order")
        ->required()
        ->expected(-1);
    cmd_concat->add_flag("--eps", concat_eps, "force the epsilon construction");
    cmd_concat->add_option("--labels", concat_labels, "write the tuple label table (JSON)");
    cmd_concat->add_option("--minimized", concat_min_out, "write the minimal DFA here");

    // ---- minimize ----
    auto* cmd_minimize = app.add_subcommand("minimize", "minimize an automaton file");
    std::string min_in, min_out;
    cmd_minimize->add_option("file", min_in, "automaton file")->required();
    cmd_minimize->add_option("--out", min_out, "output file (text/json/dot by extension)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check one family against its bound");
    std::string ver_family;
    std::vector<std::string> ver_ns;
    ReportOptions ver_opt;
    bool ver_enum = false;
    cmd_verify->add_option("--family", ver_family, "family name")->required();
    cmd_verify->add_option("--n", ver_ns, "size vector (repeatable)")->required();
    cmd_verify->add_option("--out", ver_opt.out, "report basename (.csv and .json)");
    cmd_verify->add_option("--format", ver_opt.format, "stdout format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_verify->add_flag("--enumerate", ver_enum, "run the enumeration oracle when in guard");
    cmd_verify->add_flag("--timings", ver_opt.timings,
                         "fill wall_ms (report is no longer byte-stable)");

    // ---- sweep ----
    auto* cmd_sweep = app.add_subcommand("sweep", "family x size-vector cross product");
    std::string sw_families, sw_k, sw_nvals;
    ReportOptions sw_opt;
    bool sw_enum = false;
    cmd_sweep->add_option("--families", sw_families, "comma list of family names")->required();
    cmd_sweep->add_option("--k", sw_k, "comma list of k values")->required();
    cmd_sweep->add_option("--nvals", sw_nvals, "comma list of per-factor sizes")->required();
    cmd_sweep->add_option("--out", sw_opt.out, "report basename");
    cmd_sweep->add_option("--format", sw_opt.format, "stdout format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_flag("--enumerate", sw_enum, "run the enumeration oracle when in guard");
    cmd_sweep->add_flag("--timings", sw_opt.timings, "fill wall_ms");

    // ---- unary ----
    auto* cmd_unary = app.add_subcommand("unary", "unary-language calculators");
    cmd_unary->require_subcommand(1);
    auto* un_frob = cmd_unary->add_subcommand("frobenius", "Frobenius numbers");
    std::vector<long long> frob_nums;
    un_frob->add_option("nums", frob_nums, "positive integers")->required()->expected(-1);
    auto* un_cyclic = cmd_unary->add_subcommand("cyclic", "cyclic concatenation size");
    std::string un_cyclic_n;
    un_cyclic->add_option("--n", un_cyclic_n, "cycle sizes, e.g. 12,20,30")->required();
    auto* un_tails = cmd_unary->add_subcommand("tails", "engine size for tailed automata");
    std::string un_sizes, un_finals;
    un_tails->add_option("--sizes", un_sizes, "lambda:mu list, e.g. 12:2,20:2,30:2")
        ->required();
    un_tails->add_option("--finals", un_finals,
                         "per-automaton final states, e.g. 0,13;0,21;0,31")
        ->required();
    auto* un_search = cmd_unary->add_subcommand("search", "best split of an (m,n) pair");
    long long search_m = 0, search_n = 0;
    un_search->add_option("--m", search_m)->required();
    un_search->add_option("--n", search_n)->required();

    // ---- export ----
    auto* cmd_export = app.add_subcommand("export", "convert automaton files");
    std::vector<std::string> exp_files;
    std::string exp_out_dir = ".";
    bool exp_dot = false, exp_json = false, exp_text = false;
    cmd_export->add_option("files", exp_files, "automaton files")->required()->expected(-1);
    cmd_export->add_flag("--dot", exp_dot, "write Graphviz DOT");
    cmd_export->add_flag("--json", exp_json, "write JSON");
    cmd_export->add_flag("--text", exp_text, "write the text format");
    cmd_export->add_option("--out", exp_out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_bound) {
            auto n = mcat::bounds::parse_size_vector(bound_n);
            json out;
            out["n"] = mcat::bounds::to_string(n);
            int ones = 0;
            for (int v : n.n) ones += v == 1;
            if (ones > 0) {
                // one-state factors take the interval / one-state form
                out["kind"] = "interval";
                if (n.k() >= 3) out["bound"] = mcat::bounds::interval_bound(n).str();
                if (ones == 1) {
                    int j = 0;
                    while (n.n[static_cast<size_t>(j)] != 1) ++j;
                    out["one_state_bound"] = mcat::bounds::one_state_bound(n, j).str();
                }
                if (!out.contains("bound") && !out.contains("one_state_bound"))
                    throw std::invalid_argument(
                        "no bound applies to this size vector (all factors one-state?)");
                std::cout << out.dump(2) << '\n';
                return kExitOk;
            }
            auto r = mcat::bounds::count_valid_states(n);
            out["kind"] = "valid-states";
            out["tau"] = r.tau.str();
            json u = json::array(), v = json::array();
            for (int i = 2; i <= n.k(); ++i) {
                u.push_back(r.U[static_cast<size_t>(i)].str());
                v.push_back(r.V[static_cast<size_t>(i)].str());
            }
            out["U"] = u;
            out["V"] = v;
            if (bound_closed_k3) {
                if (n.k() != 3) throw std::invalid_argument("--closed-k3 needs k = 3");
                out["closed_k3"] =
                    mcat::bounds::count_valid_k3_closed(n.n[0], n.n[1], n.n[2]).str();
            }
            if (bound_enum)
                out["enumerated"] = mcat::bounds::enumerate_valid_states(n).str();
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_witness) {
            auto family = mcat::witness::family_from_string(wit_family);
            auto n = mcat::bounds::parse_size_vector(wit_n);
            auto dfas = mcat::witness::generate(family, n);
            fs::create_directories(wit_out);
            json manifest;
            manifest["family"] = mcat::witness::family_name(family);
            manifest["n"] = mcat::bounds::to_string(n);
            manifest["expected"] = mcat::verify::expected_value(family, n).str();
            manifest["lower_bound_only"] = mcat::verify::family_is_lower_bound(family);
            json files = json::array();
            for (size_t i = 0; i < dfas.size(); ++i) {
                std::string name =
                    "A" + std::to_string(i + 1) + (wit_format == "json" ? ".json" : ".txt");
                mcat::io::write_dfa_file(dfas[i], (fs::path(wit_out) / name).string());
                files.push_back(name);
            }
            manifest["files"] = files;
            std::ofstream mf(fs::path(wit_out) / "manifest.json");
            mf << manifest.dump(2) << '\n';
            std::cout << manifest.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_concat) {
            std::vector<mcat::Dfa> dfas;
            for (const auto& f : concat_files) dfas.push_back(mcat::io::read_dfa_file(f));
            mcat::ConcatInput input{dfas};
            input.validate();
            json out;
            out["k"] = dfas.size();
            if (!concat_eps && input.is_strict()) {
                auto det = mcat::determinize_concat(input, cap);
                out["construction"] = det.used_eps_fallback ? "eps-fallback" : "eps-free";
                out["nfa_states"] = input.offsets().back();
                out["reachable"] = det.dfa.state_count;
                out["all_reachable_valid"] = true;
                auto minimal = mcat::minimize(det.dfa);
                out["minimal"] = minimal.state_count;
                if (!concat_labels.empty()) {
                    json labels = json::object();
                    for (size_t i = 0; i < det.labels.size(); ++i) {
                        const auto& t = det.labels[i];
                        json row;
                        row["q"] = t.q + 1;
                        json sets = json::array();
                        for (const auto& s : t.sets) {
                            json members = json::array();
                            s.for_each([&](int q) { members.push_back(q + 1); });
                            sets.push_back(members);
                        }
                        row["S"] = sets;
                        labels[std::to_string(i)] = row;
                    }
                    std::ofstream lf(concat_labels);
                    lf << labels.dump(2) << '\n';
                }
                if (!concat_min_out.empty()) mcat::io::write_dfa_file(minimal, concat_min_out);
            } else {
                auto nfa = mcat::build_concat_eps_nfa(input);
                auto dfa = mcat::subset_construct(nfa, cap);
                out["construction"] = "eps";
                out["nfa_states"] = nfa.state_count;
                out["reachable"] = dfa.state_count;
                auto minimal = mcat::minimize(dfa);
                out["minimal"] = minimal.state_count;
                if (!concat_min_out.empty()) mcat::io::write_dfa_file(minimal, concat_min_out);
            }
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_minimize) {
            auto dfa = mcat::io::read_dfa_file(min_in);
            auto minimal = mcat::minimize(dfa);
            json out;
            out["states_before"] = dfa.state_count;
            out["states_after"] = minimal.state_count;
            if (!min_out.empty())
                mcat::io::write_dfa_file(minimal, min_out);
            else
                std::cout << mcat::io::write_dfa_text(minimal);
            std::cerr << out.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_verify) {
            auto family = mcat::witness::family_from_string(ver_family);
            std::vector<mcat::bounds::SizeVector> grid;
            for (const auto& s : ver_ns) grid.push_back(mcat::bounds::parse_size_vector(s));
            for (const auto& n : grid)
                if (!mcat::witness::in_precondition(family, n))
                    throw std::invalid_argument("size vector " + mcat::bounds::to_string(n) +
                                                " violates the " +
                                                mcat::witness::family_name(family) +
                                                " preconditions");
            auto rep = mcat::verify::run_sweep({family}, grid, cap, jobs, ver_enum,
                                               ver_opt.timings);
            return emit_report(rep, ver_opt);
        }

        if (*cmd_sweep) {
            std::vector<mcat::witness::Family> families;
            for (const auto& name : split(sw_families, ','))
                families.push_back(mcat::witness::family_from_string(name));
            std::vector<int> ks, nvals;
            for (const auto& t : split(sw_k, ',')) ks.push_back(std::stoi(t));
            for (const auto& t : split(sw_nvals, ',')) nvals.push_back(std::stoi(t));
            auto rep = mcat::verify::run_sweep(families, grid_vectors(ks, nvals), cap,
                                               jobs, sw_enum, sw_opt.timings);
            return emit_report(rep, sw_opt);
        }

        if (*un_frob) {
            json out;
            out["g"] = mcat::unary::frobenius(frob_nums);
            out["f"] = mcat::unary::modified_frobenius(frob_nums);
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }
        if (*un_cyclic) {
            std::vector<long long> sizes;
            for (const auto& t : split(un_cyclic_n, ',')) sizes.push_back(std::stoll(t));
            auto s = mcat::unary::cyclic_concat_size(sizes);
            json out;
            out["lambda"] = s.lambda;
            out["mu"] = s.mu;
            out["states"] = s.states();
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }
        if (*un_tails) {
            std::vector<mcat::unary::UnarySize> sizes;
            for (const auto& t : split(un_sizes, ',')) {
                auto parts = split(t, ':');
                if (parts.size() != 2)
                    throw std::invalid_argument("--sizes entries look like lambda:mu");
                sizes.push_back({std::stoll(parts[0]), std::stoll(parts[1])});
            }
            auto final_groups = split(un_finals, ';');
            if (final_groups.size() != sizes.size())
                throw std::invalid_argument("--finals needs one group per automaton");
            mcat::unary::UnaryLang acc = mcat::unary::unary_lang_of_lengths({0});
            for (size_t i = 0; i < sizes.size(); ++i) {
                std::vector<long long> fs;
                for (const auto& t : split(final_groups[i], ','))
                    if (!t.empty()) fs.push_back(std::stoll(t));
                acc = mcat::unary::unary_concat(
                    acc, mcat::unary::unary_from_automaton(sizes[i].lambda, sizes[i].mu, fs));
            }
            auto s = mcat::unary::unary_minimal_size(acc);
            auto bound = mcat::unary::tails_final_bound(sizes);
            json out;
            out["lambda"] = s.lambda;
            out["mu"] = s.mu;
            out["states"] = s.states();
            json b;
            b["lambda"] = bound.size.lambda;
            b["mu"] = bound.size.mu;
            b["states"] = bound.size.states();
            json subsets = json::array();
            for (uint32_t m : bound.maximizing_subsets) subsets.push_back(m);
            b["maximizing_subsets"] = subsets;
            out["bound"] = b;
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }
        if (*un_search) {
            auto rep = mcat::unary::search_best_unary_pair(search_m, search_n);
            json out;
            out["m"] = rep.m;
            out["n"] = rep.n;
            out["best_i"] = rep.best_i;
            out["best_j"] = rep.best_j;
            out["best_value"] = rep.best_value;
            out["winner_is_exact"] = rep.winner_is_exact;
            out["runner_up_bound"] = rep.runner_up_bound;
            out["gcd"] = {
                {"m_n", rep.gcd_m_n}, {"m_n1", rep.gcd_m_n1},
                {"m1_n", rep.gcd_m1_n}, {"m2_n", rep.gcd_m2_n}};
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_export) {
            if (static_cast<int>(exp_dot) + static_cast<int>(exp_json) +
                    static_cast<int>(exp_text) != 1)
                throw std::invalid_argument("export needs exactly one of --dot/--json/--text");
            fs::create_directories(exp_out_dir);
            for (const auto& f : exp_files) {
                auto dfa = mcat::io::read_dfa_file(f);
                std::string stem = fs::path(f).stem().string();
                std::string ext = exp_dot ? ".dot" : exp_json ? ".json" : ".txt";
                mcat::io::write_dfa_file(dfa, (fs::path(exp_out_dir) / (stem + ext)).string());
            }
            return kExitOk;
        }
    } catch (const mcat::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const mcat::unary::HorizonExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
