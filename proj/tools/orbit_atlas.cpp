// Command-line surface for the orbit atlas: cominuscule family reports,
// isotropic Grassmannian posets, tangent-element classification, and the
// verification suites.

#include "orbitatlas/cominuscule.hpp"
#include "orbitatlas/isotropic.hpp"
#include "orbitatlas/serialize.hpp"
#include "orbitatlas/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace orbitatlas;
namespace fs = std::filesystem;

struct EmitSet {
    bool json = true, dot = true, tsv = true;
};

EmitSet parse_emit(const std::vector<std::string>& kinds) {
    if (kinds.empty()) return {};
    EmitSet e{false, false, false};
    for (const auto& k : kinds) {
        if (k == "json") e.json = true;
        else if (k == "dot") e.dot = true;
        else if (k == "tsv") e.tsv = true;
        else throw std::invalid_argument("unknown emit format " + k);
    }
    return e;
}

void ensure_dir(const std::string& dir) {
    if (!dir.empty()) fs::create_directories(dir);
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int cmd_cominuscule(const std::string& type_str, int rank, int node, const std::string& out_dir,
                    const EmitSet& emit, bool quiet = false) {
    RootSystem sys(dynkin_from(type_str.at(0), rank));
    CominusculeFamily fam = classify_family(sys, node);
    LociReport report = loci_report(fam);
    HasseDiagram poset = build_orbit_poset(fam);
    ensure_dir(out_dir);
    const std::string stem = sys.type().name() + "_n" + std::to_string(node);
    if (emit.tsv) write_text_file(join_path(out_dir, stem + "_orbits.tsv"), loci_to_tsv(report));
    if (emit.dot)
        write_text_file(join_path(out_dir, stem + "_poset.dot"),
                        hasse_to_dot(poset, fam.display()));
    if (emit.json)
        write_text_file(join_path(out_dir, stem + "_family.json"),
                        family_to_json(report).dump(2) + "\n");
    if (!quiet)
        std::cout << fam.display() << ": d = " << fam.d << ", dim sigma_2 = " << fam.dim_sigma2
                  << " (" << to_string(fam.fill) << "), " << poset.nodes.size() << " orbits\n";
    return 0;
}

int cmd_isotropic(std::size_t n, std::size_t k, const std::string& out_dir, const EmitSet& emit,
                  bool quiet = false) {
    IsoContext ctx(n, k);
    auto orbits = enumerate_orbits(ctx);
    HasseDiagram tangent = build_hasse(ctx);
    HasseDiagram tangential = tangential_graph(ctx);
    ensure_dir(out_dir);
    const std::string stem = "IG_k" + std::to_string(k) + "_" + std::to_string(2 * n);
    if (emit.tsv)
        write_text_file(join_path(out_dir, stem + "_orbits.tsv"), triplets_to_tsv(ctx, orbits));
    if (emit.dot) {
        write_text_file(join_path(out_dir, stem + "_tangent_poset.dot"),
                        hasse_to_dot(tangent, stem + " tangent space"));
        write_text_file(join_path(out_dir, stem + "_tangential.dot"),
                        hasse_to_dot(tangential, stem + " tangential variety"));
    }
    if (emit.json) {
        nlohmann::ordered_json j;
        j["N"] = n;
        j["k"] = k;
        j["dim_IG"] = ctx.dim_pu();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& o : orbits) {
            nlohmann::ordered_json jo;
            jo["triplet"] = triplet_to_json(o);
            jo["dim"] = orbit_dim(ctx, o);
            arr.push_back(jo);
        }
        j["orbits"] = arr;
        j["tangent_poset"] = hasse_to_json(tangent);
        j["tangential_poset"] = hasse_to_json(tangential);
        write_text_file(join_path(out_dir, stem + ".json"), j.dump(2) + "\n");
    }
    if (!quiet)
        std::cout << "IG(" << k << "," << 2 * n << "): " << orbits.size() << " orbits, "
                  << tangent.edges.size() << " covering relations\n";
    return 0;
}

int cmd_classify(std::size_t n, std::size_t k, const std::string& input) {
    IsoContext ctx(n, k);
    nlohmann::json j;
    if (input.empty() || input == "-") {
        std::cin >> j;
    } else {
        std::ifstream f(input);
        if (!f) throw std::runtime_error("cannot read " + input);
        f >> j;
    }
    TangentElement x = tangent_from_json(ctx, j);
    OrbitTriplet o = classify(ctx, x);
    nlohmann::ordered_json out;
    out["triplet"] = triplet_to_json(o);
    out["dim"] = orbit_dim(ctx, o);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const VerifyOptions& options, const std::string& out_path) {
    auto results = orbitatlas::run_verify(options);
    nlohmann::ordered_json report = verify_report(results);
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) {
        ensure_dir(fs::path(out_path).parent_path().string());
        write_text_file(out_path, report.dump(2) + "\n");
    }
    return all_passed(results) ? 0 : 1;
}

int cmd_sweep(int max_rank, std::size_t max_n, const std::string& out_dir) {
    ensure_dir(out_dir);
    std::vector<std::function<void()>> jobs;
    for (const auto& [type, node] : cominuscule_families(max_rank))
        jobs.push_back([type = type, node = node, out_dir]() {
            cmd_cominuscule(type.name().substr(0, 1), type.rank, node, out_dir, EmitSet{}, true);
        });
    for (std::size_t n = 3; n <= max_n; ++n)
        for (std::size_t k = 2; k + 1 <= n; ++k)
            jobs.push_back([n, k, out_dir]() { cmd_isotropic(n, k, out_dir, EmitSet{}, true); });

    const unsigned workers = thread_budget(0);
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) break;
                jobs[i]();
            }
        }));
    for (auto& f : futures) f.get();
    std::cout << "sweep wrote " << jobs.size() << " family reports to " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit posets of secant varieties of lines to generalized Grassmannians"};
    app.require_subcommand(1);

    std::string type_str = "A";
    int rank = 3, node = 1;
    std::string out_dir = ".";
    std::vector<std::string> emit_kinds;

    auto* com = app.add_subcommand("cominuscule",
                                   "orbit poset and loci tables for a cominuscule family");
    com->add_option("--type", type_str, "Dynkin family letter A..E")->required();
    com->add_option("--rank", rank, "rank of the root system")->required();
    com->add_option("--node", node, "marked node (1-based)")->required();
    com->add_option("--out", out_dir, "output directory");
    com->add_option("--emit", emit_kinds, "subset of json,dot,tsv")->delimiter(',');

    std::size_t iso_n = 4, iso_k = 3;
    auto* iso = app.add_subcommand("isotropic", "parabolic orbit poset for IG(k,2N)");
    iso->add_option("--n", iso_n, "half-dimension N")->required();
    iso->add_option("--k", iso_k, "isotropic subspace dimension")->required();
    iso->add_option("--out", out_dir, "output directory");
    iso->add_option("--emit", emit_kinds, "subset of json,dot,tsv")->delimiter(',');

    std::string classify_input;
    auto* cls = app.add_subcommand("classify", "classify a tangent element from JSON");
    cls->add_option("--n", iso_n, "half-dimension N")->required();
    cls->add_option("--k", iso_k, "isotropic subspace dimension")->required();
    cls->add_option("--input", classify_input, "JSON file (default stdin)");

    VerifyOptions vopts;
    std::vector<std::string> verify_families;
    std::vector<std::string> verify_contexts;
    std::string verify_out;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--families", verify_families, "cominuscule and/or isotropic")->delimiter(',');
    ver->add_option("--max-rank", vopts.max_rank, "rank bound for the cominuscule sweep");
    ver->add_option("--seed", vopts.seed, "base seed for the randomized suites");
    ver->add_option("--trials", vopts.trials_per_orbit, "random group elements per orbit");
    ver->add_option("--contexts", verify_contexts, "isotropic contexts as N:k pairs")
        ->delimiter(',');
    ver->add_option("--threads", vopts.threads,
                    "worker threads (also capped by ORBIT_ATLAS_THREADS)");
    ver->add_option("--out", verify_out, "write the JSON report here as well");
    ver->add_option("--inject-fault", vopts.inject_fault,
                    "perturb a reference formula to exercise the harness")
        ->group("");

    int sweep_rank = 6;
    std::size_t sweep_n = 5;
    auto* sweep = app.add_subcommand("sweep", "emit reports for all families up to the bounds");
    sweep->add_option("--max-rank", sweep_rank, "cominuscule rank bound");
    sweep->add_option("--max-n", sweep_n, "isotropic half-dimension bound");
    sweep->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (com->parsed())
            return cmd_cominuscule(type_str, rank, node, out_dir, parse_emit(emit_kinds));
        if (iso->parsed()) return cmd_isotropic(iso_n, iso_k, out_dir, parse_emit(emit_kinds));
        if (cls->parsed()) return cmd_classify(iso_n, iso_k, classify_input);
        if (ver->parsed()) {
            if (!verify_families.empty()) {
                vopts.run_cominuscule = false;
                vopts.run_isotropic = false;
                for (const auto& f : verify_families) {
                    if (f == "cominuscule") vopts.run_cominuscule = true;
                    else if (f == "isotropic") vopts.run_isotropic = true;
                    else throw std::invalid_argument("unknown family group " + f);
                }
            }
            if (!verify_contexts.empty()) {
                vopts.contexts.clear();
                for (const auto& c : verify_contexts) {
                    auto sep = c.find(':');
                    if (sep == std::string::npos)
                        throw std::invalid_argument("context must be N:k, got " + c);
                    vopts.contexts.emplace_back(std::stoul(c.substr(0, sep)),
                                                std::stoul(c.substr(sep + 1)));
                }
            }
            return cmd_verify(vopts, verify_out);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_rank, sweep_n, out_dir);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
