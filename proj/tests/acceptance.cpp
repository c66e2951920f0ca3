// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include "dseries/blattner.hpp"
#include "dseries/charring.hpp"
#include "dseries/cli.hpp"
#include "dseries/error.hpp"
#include "dseries/homology.hpp"
#include "dseries/oracles.hpp"
#include "dseries/orbits.hpp"
#include "dseries/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace dseries;

namespace {

struct Outcome {
    bool passed = true;
    std::size_t cases = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (ok || !passed) {
            passed = passed && ok;
            return;
        }
        passed = false;
        first_failure = what();
    }
};

const std::vector<std::string> kRankAtMost3 = {"A1",   "A1xA1", "A2",    "B2",    "G2",  "A1xA1xA1",
                                               "A1xA2", "A1xB2", "A1xG2", "A3", "B3",  "C3"};

std::vector<std::vector<bool>> all_gradings(std::size_t n) {
    std::vector<std::vector<bool>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1u;
        out.push_back(c);
    }
    return out;
}

std::string grading_name(const std::vector<bool>& c) {
    std::string s;
    for (bool b : c) s += b ? '+' : '-';
    return s;
}

Weight axis(std::size_t n, std::size_t i, long v) {
    Weight w(n);
    w[i] = v;
    return w;
}

// Integral antidominant parameters with coordinates in [-4, 0]: at least five per system.
std::vector<Weight> integral_sweep(std::size_t n) {
    std::vector<Weight> out{Weight(n), axis(n, 0, -1), axis(n, n - 1, -1), axis(n, 0, -4)};
    Weight minus_one(n), mixed(n);
    for (std::size_t i = 0; i < n; ++i) {
        minus_one[i] = -1;
        mixed[i] = i % 2 == 0 ? -2 : 0;
    }
    out.push_back(minus_one);
    out.push_back(mixed);
    if (n == 1) out = {Weight{0}, Weight{-1}, Weight{-2}, Weight{-3}, Weight{-4}};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Three strongly antidominant parameters with lam + rho integral, coordinates in [-4, -1].
std::vector<Weight> discrete_sweep(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> coord(-4, -1);
    std::vector<Weight> out;
    for (int k = 0; k < 3; ++k) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = coord(rng);
        out.push_back(w);
    }
    return out;
}

Outcome weyl_character_identity() {
    Outcome o;
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        RootSystem rs = RootSystem::build(cartan_matrix(type));
        WeylGroup W = WeylGroup::generate(rs);
        const FormalCharacter denom = weyl_denominator(rs);
        for (const Weight& lam : integral_sweep(rs.rank())) {
            o.expect(freudenthal_character(rs, lam) * denom == weyl_numerator(rs, W, lam),
                     [&] { return std::string(type) + " lam=" + lam.to_string(); });
        }
    }
    return o;
}

Outcome kostant_consistency() {
    Outcome o;
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        RootSystem rs = RootSystem::build(cartan_matrix(type));
        WeylGroup W = WeylGroup::generate(rs);
        for (const Weight& lam : integral_sweep(rs.rank())) {
            auto where = [&] { return std::string(type) + " lam=" + lam.to_string(); };
            HomologyTable t = kostant_table(rs, W, lam);
            o.expect(euler_character(t) == weyl_numerator(rs, W, lam), where);
            for (int p = 0; p <= W.max_length(); ++p) {
                auto it = t.rows().find(p);
                o.expect(it != t.rows().end() && it->second.size() == W.length_fiber(p).size(), where);
            }
            o.expect(kostant_via_bgg(rs, W, lam) == t, where);
        }
    }
    return o;
}

Outcome orbit_combinatorics() {
    Outcome o;
    for (const std::string& type : kRankAtMost3) {
        const IntMatrix cartan = cartan_matrix(type);
        for (const auto& compact : all_gradings(cartan.size())) {
            EqualRankForm f = EqualRankForm::make(cartan, compact);
            auto where = [&] { return type + " " + grading_name(compact); };
            auto orbits = enumerate_closed_orbits(f);
            o.expect(orbits.size() * f.k_weyl.order() == f.weyl.order(), where);
            std::vector<int> hits(f.weyl.order(), 0);
            for (const ClosedOrbit& orbit : orbits) {
                for (const WeylElement& w : f.k_weyl.elements()) ++hits[f.weyl.compose(w, orbit.u).index()];
            }
            bool partition = true;
            for (int h : hits) partition = partition && h == 1;
            o.expect(partition, where);
        }
    }
    return o;
}

Outcome schmid_via_trauber_sweep() {
    Outcome o;
    std::mt19937 rng(4);
    for (const std::string& type : kRankAtMost3) {
        const IntMatrix cartan = cartan_matrix(type);
        for (const auto& compact : all_gradings(cartan.size())) {
            EqualRankForm f = EqualRankForm::make(cartan, compact);
            const auto orbits = enumerate_closed_orbits(f);
            bool all_compact = f.grading.q() == 0;
            for (const Weight& lam : discrete_sweep(f.rank(), rng)) {
                auto where = [&] { return type + " " + grading_name(compact) + " lam=" + lam.to_string(); };
                for (const ClosedOrbit& orbit : orbits) {
                    o.expect(schmid_via_trauber(f, orbit, lam) == schmid_table(f, orbit, lam), where);
                }
                if (all_compact) {
                    // Degree l(w) and weight w lam + rho: Kostant's table for lowest weight lam + rho.
                    o.expect(schmid_table(f, orbits.front(), lam) == kostant_table(f.roots, f.weyl, lam + f.roots.rho()),
                             where);
                }
            }
        }
    }
    return o;
}

Outcome elliptic_character() {
    Outcome o;
    std::mt19937 rng(4);
    for (const std::string& type : kRankAtMost3) {
        const IntMatrix cartan = cartan_matrix(type);
        for (const auto& compact : all_gradings(cartan.size())) {
            EqualRankForm f = EqualRankForm::make(cartan, compact);
            const auto orbits = enumerate_closed_orbits(f);
            const ClosedOrbit& reference = orbits[reference_orbit_index(orbits)];
            for (const Weight& lam : discrete_sweep(f.rank(), rng)) {
                FormalCharacter euler = euler_character(schmid_table(f, reference, lam));
                // Independent expansion of the numerator straight from W_K and l_K.
                FormalCharacter expected;
                const long long sign = f.grading.q() % 2 == 0 ? 1 : -1;
                for (const WeylElement& w : f.k_weyl.elements()) {
                    expected.add_term(w.act(lam) + f.roots.rho(), f.k_weyl.length_k(w) % 2 == 0 ? sign : -sign);
                }
                auto where = [&] { return type + " " + grading_name(compact) + " lam=" + lam.to_string(); };
                o.expect(euler == discrete_numerator(f, lam), where);
                o.expect(euler == expected, where);
            }
        }
    }
    return o;
}

Outcome blattner_equivalence() {
    Outcome o;
    struct Case {
        const char* type;
        std::vector<bool> compact;
        std::vector<Weight> lambdas;
    };
    const std::vector<Case> cases = {
        {"A1", {false}, {Weight{-1}, Weight{-2}, Weight{-3}, Weight{-4}}},
        {"A2", {true, false}, {Weight{-1, -1}, Weight{-2, -1}, Weight{-1, -2}, Weight{-2, -2}}},
        {"A2", {false, true}, {Weight{-1, -1}, Weight{-2, -1}, Weight{-1, -2}, Weight{-2, -2}}},
        {"A2", {false, false}, {Weight{-1, -1}, Weight{-2, -1}, Weight{-1, -2}, Weight{-2, -2}}},
    };
    for (const Case& c : cases) {
        EqualRankForm f = EqualRankForm::make(cartan_matrix(c.type), c.compact);
        std::string box_text;
        for (std::size_t i = 0; i < f.rank(); ++i) box_text += (i ? "," : "") + std::string("-8..0");
        const WeightBox box = WeightBox::parse(box_text);
        for (const Weight& lam : c.lambdas) {
            auto where = [&] { return std::string(c.type) + " " + grading_name(c.compact) + " lam=" + lam.to_string(); };
            const KTypeTable table = ktype_table(f, lam, box);
            for (const Weight& nu : box.integer_points()) {
                bool antidominant = true;
                for (std::size_t k : f.grading.compact_positive()) {
                    antidominant = antidominant && f.roots.coroot_pairing(k, nu) <= 0;
                }
                if (!antidominant) continue;
                const long long closed = blattner_multiplicity(f, lam, nu);
                const long long replay = filtration_oracle(f, lam, nu, required_truncation(f, lam, nu));
                auto it = table.entries.find(nu);
                o.expect(closed == replay && closed == (it == table.entries.end() ? 0 : it->second),
                         [&] { return where() + " nu=" + nu.to_string(); });
            }
            if (f.rank() == 1) {
                // sl(2,R): lam - rho_n - k alpha for k >= 0, each once.
                std::map<Weight, long long> expected;
                for (long k = 0;; ++k) {
                    Weight nu = lam - f.grading.rho_n() - Weight{2 * k};
                    if (nu[0] < -8) break;
                    if (nu[0] <= 0) expected[nu] = 1;
                }
                o.expect(table.entries == expected, where);
            }
        }
    }
    return o;
}

Outcome partition_function() {
    Outcome o;
    const long radius = 6;
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        const IntMatrix cartan = cartan_matrix(type);
        for (const auto& compact : all_gradings(cartan.size())) {
            EqualRankForm f = EqualRankForm::make(cartan, compact);
            if (f.grading.q() == 0) continue;
            const std::size_t n = f.rank();
            auto tally = oracle::enumerate_partitions(f, radius * static_cast<long>(n));
            PartitionCounter counter(f.roots, f.grading);
            auto where = [&] { return std::string(type) + " " + grading_name(compact); };
            o.expect(counter.count(Weight(n)) == 1, where);
            std::vector<long> mu(n, -radius);
            while (true) {
                const Weight w = f.roots.from_root_coords(mu);
                long long total = 0;
                for (int p = 0; p <= radius * static_cast<int>(n); ++p) {
                    auto it = tally.find({mu, p});
                    const long long expected = it == tally.end() ? 0 : it->second;
                    total += expected;
                    o.expect(counter.count_parts(w, p) == expected, [&] { return where() + " mu=" + w.to_string(); });
                }
                o.expect(counter.count(w) == total, [&] { return where() + " mu=" + w.to_string(); });
                bool off_cone = false;
                for (long x : mu) off_cone = off_cone || x < 0;
                if (off_cone) o.expect(counter.count(w) == 0, where);
                std::size_t i = 0;
                while (i < n && mu[i] == radius) mu[i++] = -radius;
                if (i == n) break;
                ++mu[i];
            }
            // Outside the root lattice.
            if (n == 2 && std::string(type) == "A2") o.expect(counter.count(Weight{1, 0}) == 0, where);
        }
    }
    return o;
}

Outcome grading_validity() {
    Outcome o;
    std::mt19937 rng(11);
    for (const char* type : {"A2", "B2"}) {
        RootSystem rs = RootSystem::build(cartan_matrix(type));
        int rejected_cases = 0;
        while (rejected_cases < 1000) {
            std::vector<int> a(rs.num_positive_roots());
            for (int& x : a) x = (rng() & 1u) ? 1 : -1;
            if (oracle::is_multiplicative_by_restriction(rs, a)) continue;
            ++rejected_cases;
            o.expect(!validate_grading(rs, a), [&] { return std::string(type) + " accepted a bad assignment"; });
        }
        for (const auto& compact : all_gradings(rs.rank())) {
            CompactGrading g = build_grading(rs, compact);
            o.expect(validate_grading(rs, g.signs()), [&] { return std::string(type) + " " + grading_name(compact); });
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    for (const char* text : {R"({"system": "A2", "compact_simple": [true, false]})",
                             R"({"system": "B2", "compact_simple": [false, false]})",
                             R"({"system": "G2", "compact_simple": [false, true], "lambda": ["-2", "-1"]})",
                             R"({"system": "A3", "compact_simple": [true, false, true]})"}) {
        cli::JobConfig config = cli::parse_config(nlohmann::json::parse(text));
        std::vector<std::string> outputs;
        for (unsigned threads : {1u, 4u, 1u, 8u}) {
            config.threads = threads;
            cli::RunResult r = cli::run("verify", config);
            o.expect(r.exit_code == 0, [&] { return std::string(text) + " verify failed:\n" + r.output; });
            outputs.push_back(r.output);
        }
        for (const auto& out : outputs) o.expect(out == outputs.front(), [&] { return std::string(text); });
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"AC1", "Weyl character identity via Freudenthal", weyl_character_identity},
        {"AC2", "Kostant tables: Euler characteristic, row sizes, BGG pipeline", kostant_consistency},
        {"AC3", "closed orbit count and W_K u coset partition", orbit_combinatorics},
        {"AC4", "Schmid tables via Trauber terms; all-compact gives Kostant", schmid_via_trauber_sweep},
        {"AC5", "Euler characteristic of the u = e table is the discrete numerator", elliptic_character},
        {"AC6", "Blattner closed form equals the filtration oracle", blattner_equivalence},
        {"AC7", "partition DP equals exhaustive enumeration", partition_function},
        {"AC8", "grading validation fuzz", grading_validity},
        {"AC9", "verify output identical across thread counts", determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const Error& e) {
            o.passed = false;
            o.first_failure = std::string(e.kind_name()) + ": " + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s  %s  [%zu cases, %.2f s]%s%s\n", c.id, o.passed ? "PASS" : "FAIL", c.name, o.cases, secs,
                    o.passed ? "" : "  first failure: ", o.first_failure.c_str());
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
