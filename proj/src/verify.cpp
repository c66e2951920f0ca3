#include "dseries/verify.hpp"

#include "dseries/blattner.hpp"
#include "dseries/charring.hpp"
#include "dseries/error.hpp"
#include "dseries/homology.hpp"
#include "dseries/oracles.hpp"
#include "dseries/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace dseries {

namespace {

// Accumulates failures for one property; the first few are kept verbatim.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) failures_ << (failed_ > 1 ? "; " : "") << what;
    }
    void note(const std::string& text) { note_ = text; }

    PropertyResult finish(std::string name) const {
        PropertyResult r;
        r.name = std::move(name);
        r.passed = failed_ == 0;
        if (r.passed) {
            r.detail = std::to_string(checked_) + " checks";
            if (!note_.empty()) r.detail += ", " + note_;
        } else {
            r.detail = std::to_string(failed_) + "/" + std::to_string(checked_) + " failed: " + failures_.str();
        }
        return r;
    }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::ostringstream failures_;
    std::string note_;
};

using Task = std::function<PropertyResult()>;

Weight fundamental(std::size_t rank, std::size_t i, long scale) {
    Weight w(rank);
    w[i] = scale;
    return w;
}

std::vector<Weight> integral_antidominant_samples(const RootSystem& rs, std::mt19937& rng) {
    const std::size_t n = rs.rank();
    std::vector<Weight> out{Weight(n)};
    if (n > 3) {
        // Modules with lowest weight -rho are far too large here.
        out.push_back(fundamental(n, 0, -1));
        out.push_back(fundamental(n, n - 1, -1));
    } else if (n > 0) {
        out.push_back(-rs.rho());
        out.push_back(fundamental(n, 0, -1));
        out.push_back(fundamental(n, n - 1, -2));
        std::uniform_int_distribution<long> coord(-2, 0);
        Weight r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = coord(rng);
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Weight> discrete_samples(const RootSystem& rs, std::mt19937& rng,
                                     const std::optional<Weight>& extra) {
    const std::size_t n = rs.rank();
    std::vector<Weight> out{-rs.rho()};
    if (n > 0) {
        out.push_back(-rs.rho() + fundamental(n, 0, -1));
        std::uniform_int_distribution<long> coord(-3, -1);
        Weight r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = coord(rng);
        out.push_back(r);
    }
    if (extra && extra->rank() == n) {
        WeightClass c = rs.classify(*extra);
        if (c.strongly_antidominant && (*extra + rs.rho()).is_integral()) out.push_back(*extra);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void execute(std::vector<std::pair<std::string, Task>>& tasks, std::vector<PropertyResult>& results, unsigned threads) {
    results.assign(tasks.size(), PropertyResult{});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i].second();
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace

// The property bodies capture locals by reference, so they run before this
// function returns.
std::vector<PropertyResult> run_verify(const EqualRankForm& form, const VerifyOptions& options) {
    const RootSystem& rs = form.roots;
    const WeylGroup& W = form.weyl;
    const KWeylData& K = form.k_weyl;
    const CompactGrading& g = form.grading;
    const std::size_t n = rs.rank();

    std::mt19937 rng(options.seed);
    const std::vector<Weight> integral = integral_antidominant_samples(rs, rng);
    const std::vector<Weight> discrete = discrete_samples(rs, rng, options.lambda);

    std::vector<std::pair<std::string, Task>> tasks;
    auto add = [&](std::string name, std::function<void(Check&)> body) {
        tasks.emplace_back(name, [name, body] {
            Check check;
            try {
                body(check);
            } catch (const Error& e) {
                check.expect(false, std::string(e.kind_name()) + ": " + e.what());
            } catch (const std::exception& e) {
                check.expect(false, std::string("exception: ") + e.what());
            }
            return check.finish(name);
        });
    };

    add("roots.reflection_closure", [&](Check& c) {
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                auto image = rs.find_by_fw(W.simple_reflection(i).act(rs.positive_roots()[k].fw_coords));
                c.expect(image.has_value(), "s_i(alpha) not a root");
            }
            const WeylElement& s = W.reflection(rs, k);
            SignedRoot self = apply_to_root(rs, s, k);
            c.expect(self.index == k && self.sign < 0, "s_alpha(alpha) != -alpha");
            if (k >= n) continue;
            // A simple reflection permutes the positive roots other than its own.
            std::set<std::size_t> image;
            for (std::size_t j = 0; j < rs.num_positive_roots(); ++j) {
                if (j == k) continue;
                SignedRoot r = apply_to_root(rs, s, j);
                c.expect(r.sign > 0 && r.index != k, "s_i sends a positive root other than alpha_i negative");
                image.insert(r.index);
            }
            c.expect(image.size() + 1 == rs.num_positive_roots(), "s_i is not a bijection");
        }
        std::set<std::vector<long>> mine;
        for (const Root& r : rs.positive_roots()) mine.insert(r.root_coords);
        c.expect(mine == oracle::positive_roots_dfs(rs.cartan()), "DFS closure oracle disagrees");
    });

    add("roots.coordinates", [&](Check& c) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                c.expect(rs.positive_roots()[j].fw_coords[i] == rs.cartan()[i][j], "simple root fw != column");
            }
        }
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            c.expect(rs.coroot_pairing(k, rs.root_weight(k)) == 2, "<alpha^vee, alpha> != 2");
        }
        for (std::size_t i = 0; i < n; ++i) c.expect(rs.rho()[i] == 1, "rho is not all ones");
    });

    add("weyl.lengths_and_signs", [&](Check& c) {
        c.expect(W.order() == oracle::weyl_order_by_left_closure(rs.cartan()), "order disagrees with oracle");
        std::vector<std::size_t> fiber(static_cast<std::size_t>(W.max_length()) + 1, 0);
        int longest = 0;
        for (const WeylElement& w : W.elements()) {
            c.expect(w.length() == static_cast<int>(w.reduced_word().size()), "length != |word|");
            c.expect(w.length() == inversion_count(rs, w), "length != inversions");
            c.expect(w.sign() == w.determinant(), "sign != det");
            ++fiber[static_cast<std::size_t>(w.length())];
            if (w.length() == W.max_length()) ++longest;
        }
        c.expect(longest == 1, "longest element not unique");
        std::size_t sum = 0;
        for (std::size_t p = 0; p < fiber.size(); ++p) {
            sum += fiber[p];
            c.expect(fiber[p] == fiber[fiber.size() - 1 - p], "length generating function not palindromic");
        }
        c.expect(sum == W.order(), "fibers do not sum to |W|");
        c.expect(W.max_length() == static_cast<int>(rs.num_positive_roots()), "l(w0) != |R+|");
    });

    add("weyl.action_inverse", [&](Check& c) {
        for (const Weight& lam : integral) {
            for (const WeylElement& w : W.elements()) {
                c.expect(w.act(W.inverse(w).act(lam)) == lam, "w w^{-1} lam != lam");
            }
        }
    });

    add("grading.multiplicative", [&](Check& c) {
        c.expect(validate_grading(rs, g.signs()), "simple-sign grading rejected");
        c.expect(oracle::is_multiplicative_by_restriction(rs, g.signs()), "oracle rejects grading");
        c.expect(g.rho_c() + g.rho_n() == rs.rho(), "rho_c + rho_n != rho");
        c.expect(g.q() == static_cast<int>(g.noncompact_positive().size()), "q != |R_n+|");
        c.expect(filtration_line_bundle(form, Weight(n), Weight(n)) == g.rho_c() - g.rho_n(),
                 "rho - 2 rho_n != rho_c - rho_n");
    });

    add("weyl_k.structure", [&](Check& c) {
        c.expect(W.order() % K.order() == 0, "|W_K| does not divide |W|");
        for (const WeylElement& w : K.elements()) {
            c.expect(w.sign() == (K.length_k(w) % 2 == 0 ? 1 : -1), "epsilon restricted to W_K differs");
        }
        for (std::size_t a : K.simple_k()) {
            c.expect(rs.coroot_pairing(a, g.rho_c()) == 1, "<alpha^vee, rho_c> != 1 on a simple compact root");
        }
    });

    add("orbits.coset_partition", [&](Check& c) {
        auto orbits = enumerate_closed_orbits(form);
        c.expect(orbits.size() * K.order() == W.order(), "orbit count != |W|/|W_K|");
        std::vector<int> hits(W.order(), 0);
        for (const ClosedOrbit& orbit : orbits) {
            c.expect(orbit.strata.size() == K.order(), "strata count != |W_K|");
            c.expect(!orbit.strata.empty() && orbit.strata.front().dim == 0 && orbit.strata.front().cell == orbit.u,
                     "dim-0 stratum is not the cell of u");
            for (const Stratum& s : orbit.strata) {
                ++hits[s.cell.index()];
                c.expect(s.dim == K.length_k(s.w), "stratum dim != l_K");
            }
            for (std::size_t a : g.compact_positive()) {
                c.expect(orbit.positive_system[a] > 0, "positive system misses a compact root");
            }
        }
        for (int h : hits) c.expect(h == 1, "W_K u cosets do not partition W");
    });

    add("charring.denominator", [&](Check& c) {
        if (rs.num_positive_roots() > 16) {
            c.note("subset expansion skipped above 16 positive roots");
            return;
        }
        c.expect(weyl_denominator(rs) == weyl_denominator_by_subsets(rs), "product != subset expansion");
    });

    add("charring.weyl_identity", [&](Check& c) {
        const FormalCharacter denom = weyl_denominator(rs);
        for (const Weight& lam : integral) {
            c.expect(freudenthal_character(rs, lam) * denom == weyl_numerator(rs, W, lam),
                     "ch(F) * denominator != numerator at " + lam.to_string());
        }
    });

    add("homology.kostant", [&](Check& c) {
        for (const Weight& lam : integral) {
            HomologyTable table = kostant_table(rs, W, lam);
            c.expect(euler_character(table) == weyl_numerator(rs, W, lam), "Euler characteristic mismatch");
            for (const auto& [p, row] : table.rows()) {
                c.expect(row.size() == W.length_fiber(p).size(), "row size != |W(p)|");
            }
            c.expect(kostant_via_bgg(rs, W, lam) == table, "BGG pipeline disagrees at " + lam.to_string());
        }
    });

    add("homology.schmid", [&](Check& c) {
        auto orbits = enumerate_closed_orbits(form);
        const int top = g.q() + 2 * K.dim_q();
        for (const Weight& lam : discrete) {
            for (const ClosedOrbit& orbit : orbits) {
                HomologyTable table = schmid_table(form, orbit, lam);
                c.expect(table.total() == K.order(), "table size != |W_K|");
                for (const auto& [p, row] : table.rows()) c.expect(p >= 0 && p <= top, "degree out of range");
                c.expect(schmid_via_trauber(form, orbit, lam) == table,
                         "Trauber pipeline disagrees for u = " + orbit.u.word_string());
            }
        }
    });

    add("charring.elliptic_numerator", [&](Check& c) {
        auto orbits = enumerate_closed_orbits(form);
        const ClosedOrbit& reference = orbits[reference_orbit_index(orbits)];
        for (const Weight& lam : discrete) {
            c.expect(euler_character(schmid_table(form, reference, lam)) == discrete_numerator(form, lam),
                     "Euler characteristic != discrete numerator at " + lam.to_string());
        }
    });

    if (n <= 3) {
        add("blattner.partition_function", [&](Check& c) {
            const long radius = n <= 2 ? 6 : 3;
            const long max_height = radius * static_cast<long>(n);
            auto tally = oracle::enumerate_partitions(form, max_height);
            PartitionCounter counter(rs, g);
            std::vector<long> mu(n, -radius);
            c.expect(counter.count(Weight(n)) == 1, "P(0) != 1");
            while (true) {
                const Weight w = rs.from_root_coords(mu);
                long long total = 0;
                for (long p = 0; p <= max_height; ++p) {
                    auto it = tally.find({mu, static_cast<int>(p)});
                    long long expected = it == tally.end() ? 0 : it->second;
                    total += expected;
                    c.expect(counter.count_parts(w, static_cast<int>(p)) == expected, "P_p mismatch");
                }
                c.expect(counter.count(w) == total, "P mismatch at " + w.to_string());
                std::size_t i = 0;
                while (i < n && mu[i] == radius) mu[i++] = -radius;
                if (i == n) break;
                ++mu[i];
            }
            c.note("radius " + std::to_string(radius));
        });

        add("blattner.filtration_oracle", [&](Check& c) {
            const long side = n <= 2 ? 6 : 3;
            WeightBox box{Weight(n), Weight(n)};
            for (std::size_t i = 0; i < n; ++i) box.lo[i] = -side;
            for (const Weight& lam : discrete) {
                KTypeTable closed = ktype_table(form, lam, box);
                KTypeTable replay = filtration_oracle_table(form, lam, box);
                c.expect(closed.entries == replay.entries, "closed form != filtration at " + lam.to_string());
                for (const auto& [nu, m] : closed.entries) c.expect(m > 0, "negative multiplicity");
            }
            c.note("box [-" + std::to_string(side) + ",0]^" + std::to_string(n));
        });
    }
    std::vector<PropertyResult> results;
    execute(tasks, results, options.threads);
    return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

}  // namespace dseries
