#include "orbitatlas/verify.hpp"

#include "orbitatlas/cominuscule.hpp"
#include "orbitatlas/serialize.hpp"
#include "orbitatlas/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

namespace orbitatlas {

unsigned thread_budget(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("ORBIT_ATLAS_THREADS")) {
        long v = std::strtol(cap, nullptr, 10);
        if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

namespace {

long closed_form_d(const CominusculeFamily& fam) {
    switch (fam.name) {
        case FamilyName::Grassmannian: return std::min(fam.param_k, fam.param_n - fam.param_k);
        case FamilyName::Quadric: return 2;
        case FamilyName::LagrangianGrassmannian: return fam.param_n;
        case FamilyName::Spinor: return fam.param_n / 2;
        case FamilyName::CayleyPlane: return 2;
        case FamilyName::E7P7: return 3;
    }
    return -1;
}

SuiteResult cascade_suite(const VerifyOptions& options) {
    SuiteResult suite{"cominuscule-cascade-table"};
    for (const auto& [type, node] : cominuscule_families(options.max_rank)) {
        RootSystem sys(type);
        CominusculeFamily fam = classify_family(sys, node);
        auto cascade = max_orthogonal_cascade(sys, node);
        const std::string where = fam.display() + " [" + type.name() + " node " +
                                  std::to_string(node) + "]";

        ++suite.checks;
        if (static_cast<long>(cascade.length()) != closed_form_d(fam))
            suite.failures.push_back(where + ": cascade length " +
                                     std::to_string(cascade.length()) +
                                     " != table value " + std::to_string(closed_form_d(fam)));
        ++suite.checks;
        std::size_t exhaustive = exhaustive_max_orthogonal(sys, node);
        if (cascade.length() != exhaustive)
            suite.failures.push_back(where + ": greedy cascade " +
                                     std::to_string(cascade.length()) +
                                     " below exhaustive maximum " + std::to_string(exhaustive));
        ++suite.checks;
        bool sane = true;
        auto radical = parabolic_roots(sys, node).radical;
        for (std::size_t i = 0; i < cascade.roots.size() && sane; ++i) {
            const Root& b = cascade.roots[i];
            if (!sys.is_long(b) || sys.coefficient(b, node) < 1) sane = false;
            if (std::find(radical.begin(), radical.end(), b) == radical.end()) sane = false;
            for (std::size_t j = 0; j < i; ++j)
                if (sys.inner(b, cascade.roots[j]) != 0) sane = false;
        }
        if (!sane) suite.failures.push_back(where + ": cascade not orthogonal-long in Phi_k^+");
        ++suite.checks;
        for (const Root& b : radical)
            if (sys.coefficient(b, node) != 1) {
                suite.failures.push_back(where + ": grading has m_k > 1 on a radical root");
                break;
            }
    }
    return suite;
}

SuiteResult invariance_suite(const VerifyOptions& options) {
    SuiteResult suite{"isotropic-group-invariance"};
    struct Task {
        IsoContext ctx;
        OrbitTriplet orbit;
        std::uint64_t salt;
    };
    std::vector<Task> tasks;
    std::uint64_t ctx_index = 0;
    for (const auto& [n, k] : options.contexts) {
        IsoContext ctx(n, k);
        for (const auto& o : enumerate_orbits(ctx))
            tasks.push_back({ctx, o, (ctx_index << 32) ^ static_cast<std::uint64_t>(
                                         (o.r << 16) | (o.h << 8) | o.t)});
        ++ctx_index;
    }

    const unsigned workers = thread_budget(options.threads);
    std::vector<std::future<std::pair<std::size_t, std::vector<std::string>>>> futures;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        std::size_t checks = 0;
        std::vector<std::string> failures;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            TangentElement rep = representative(task.ctx, task.orbit);
            for (std::size_t trial = 0; trial < options.trials_per_orbit; ++trial) {
                std::uint64_t seed = options.seed ^ task.salt ^ (trial * 0x100000001b3ULL);
                GroupElement g = random_group_element(task.ctx, seed);
                OrbitTriplet got = classify(task.ctx, act(task.ctx, g, rep));
                ++checks;
                if (got != task.orbit) {
                    failures.push_back("IG(" + std::to_string(task.ctx.k) + "," +
                                       std::to_string(2 * task.ctx.N) + ") orbit " +
                                       task.orbit.str() + " seed " + std::to_string(seed) +
                                       " classified as " + got.str());
                    break;
                }
            }
        }
        return std::make_pair(checks, failures);
    };
    for (unsigned w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) {
        auto [checks, failures] = f.get();
        suite.checks += checks;
        suite.failures.insert(suite.failures.end(), failures.begin(), failures.end());
    }
    std::sort(suite.failures.begin(), suite.failures.end());
    return suite;
}

std::vector<IsoContext> witness_contexts() {
    std::vector<IsoContext> out;
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::size_t k = 2; k + 1 <= n; ++k) out.emplace_back(n, k);
    return out;
}

SuiteResult witness_suite(const VerifyOptions&) {
    SuiteResult suite{"isotropic-degeneration-witness"};
    const Rational eps_samples[] = {rat(1), rat(2), rat(7)};
    for (const IsoContext& ctx : witness_contexts()) {
        const std::string where = "IG(" + std::to_string(ctx.k) + "," + std::to_string(2 * ctx.N) + ")";
        std::vector<DegenerationWitness> witnesses;
        for (const auto& [lower, upper] : minimal_move_pairs(ctx))
            witnesses.push_back(degeneration_witness(ctx, lower, upper));
        const OrbitTriplet codense{static_cast<long>(ctx.k) - 1, 1, 1};
        for (const auto& o : enumerate_orbits(ctx))
            if (o != codense && o != OrbitTriplet{static_cast<long>(ctx.k), 0, 0})
                witnesses.push_back(eta_witness(ctx, o));
        for (const DegenerationWitness& w : witnesses) {
            for (const Rational& e : eps_samples) {
                ++suite.checks;
                OrbitTriplet got = classify(ctx, w.at(e));
                if (got != w.upper)
                    suite.failures.push_back(where + " " + w.family + " " + w.lower.str() + "->" +
                                             w.upper.str() + " at eps=" + rat_to_string(e) +
                                             " classified as " + got.str());
            }
            ++suite.checks;
            OrbitTriplet got = classify(ctx, w.limit());
            if (got != w.lower)
                suite.failures.push_back(where + " " + w.family + " " + w.lower.str() + "->" +
                                         w.upper.str() + " limit classified as " + got.str());
        }
    }
    return suite;
}

SuiteResult dimension_suite(const VerifyOptions& options) {
    SuiteResult suite{"isotropic-dimension-identities"};
    const bool flip = options.inject_fault == "dim-sign";
    for (std::size_t n = 3; n <= 12; ++n)
        for (std::size_t k = 2; k + 1 <= n; ++k) {
            IsoContext ctx(n, k);
            const long kk = static_cast<long>(k), nn = static_cast<long>(n);
            auto reference = [&](const OrbitTriplet& o) {
                long tt = o.t * (o.t + 1) / 2;
                return o.r * (o.r + 1) / 2 + (o.r + o.h) * (2 * nn - kk - o.r) +
                       (flip ? -tt : tt) - o.h * o.h - o.t * o.t;
            };
            OrbitTriplet dense{kk, 0, 0}, codense{kk - 1, 1, 1};
            ++suite.checks;
            if (orbit_dim(ctx, dense) != kk * (4 * nn - 3 * kk + 1) / 2 ||
                reference(dense) != orbit_dim(ctx, dense))
                suite.failures.push_back("dense orbit dimension identity fails at IG(" +
                                         std::to_string(k) + "," + std::to_string(2 * n) + ")");
            ++suite.checks;
            if (orbit_dim(ctx, codense) != ctx.dim_pu() - 1 ||
                reference(codense) != orbit_dim(ctx, codense))
                suite.failures.push_back("codimension-one identity fails at IG(" +
                                         std::to_string(k) + "," + std::to_string(2 * n) +
                                         "): reference " + std::to_string(reference(codense)) +
                                         " vs " + std::to_string(orbit_dim(ctx, codense)));
        }
    return suite;
}

} // namespace

std::vector<std::pair<OrbitTriplet, OrbitTriplet>> minimal_move_pairs(const IsoContext& ctx) {
    static const long moves[4][3] = {{0, 1, 1}, {0, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    std::vector<std::pair<OrbitTriplet, OrbitTriplet>> pairs;
    for (const auto& o : enumerate_orbits(ctx))
        for (const auto& m : moves) {
            OrbitTriplet up{o.r + m[0], o.h + m[1], o.t + m[2]};
            if (is_valid_triplet(ctx, up)) pairs.emplace_back(o, up);
        }
    return pairs;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
    std::vector<SuiteResult> results;
    if (options.run_cominuscule) results.push_back(cascade_suite(options));
    if (options.run_isotropic) {
        results.push_back(invariance_suite(options));
        results.push_back(witness_suite(options));
        results.push_back(dimension_suite(options));
    }
    return results;
}

nlohmann::ordered_json verify_report(const std::vector<SuiteResult>& results) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json js;
        js["suite"] = r.name;
        js["checks"] = r.checks;
        js["failures"] = r.failures;
        js["passed"] = r.passed();
        suites.push_back(js);
    }
    j["suites"] = suites;
    j["passed"] = all_passed(results);
    return j;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed(); });
}

} // namespace orbitatlas
