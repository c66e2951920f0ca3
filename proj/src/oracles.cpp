#include "dseries/oracles.hpp"

#include <functional>

namespace dseries::oracle {

std::set<std::vector<long>> positive_roots_dfs(const IntMatrix& cartan) {
    const std::size_t n = cartan.size();
    std::set<std::vector<long>> found;
    std::vector<std::vector<long>> stack;
    for (std::size_t i = n; i > 0; --i) {
        std::vector<long> e(n, 0);
        e[i - 1] = 1;
        stack.push_back(e);
    }
    while (!stack.empty()) {
        std::vector<long> beta = stack.back();
        stack.pop_back();
        if (!found.insert(beta).second) continue;
        for (std::size_t i = n; i > 0; --i) {
            const std::size_t g = i - 1;
            long pair = 0;
            for (std::size_t j = 0; j < n; ++j) pair += cartan[g][j] * beta[j];
            std::vector<long> image = beta;
            image[g] -= pair;
            bool positive = true;
            bool nonzero = false;
            for (long x : image) {
                positive &= x >= 0;
                nonzero |= x != 0;
            }
            if (positive && nonzero && !found.count(image)) stack.push_back(image);
        }
    }
    return found;
}

std::size_t weyl_order_by_left_closure(const IntMatrix& cartan) {
    const std::size_t n = cartan.size();
    // Action on simple-root coordinates this time: s_i(beta) = beta - (C beta)_i e_i.
    std::vector<std::vector<long>> gens;
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<long> m(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) m[g * n + j] -= cartan[g][j];
        gens.push_back(m);
    }
    std::vector<long> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::set<std::vector<long>> seen{id};
    std::vector<std::vector<long>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& m : frontier) {
            for (const auto& s : gens) {
                std::vector<long> prod(n * n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t k = 0; k < n; ++k) {
                        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] += s[i * n + k] * m[k * n + j];
                    }
                }
                if (seen.insert(prod).second) next.push_back(prod);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

std::map<std::pair<std::vector<long>, int>, long long> enumerate_partitions(const EqualRankForm& form,
                                                                           long max_height) {
    const RootSystem& rs = form.roots;
    std::vector<const Root*> roots;
    for (std::size_t k : form.grading.noncompact_positive()) roots.push_back(&rs.positive_roots()[k]);

    std::map<std::pair<std::vector<long>, int>, long long> tally;
    std::vector<long> counts(roots.size(), 0);
    std::function<void(std::size_t, long)> recurse = [&](std::size_t i, long budget) {
        if (i == roots.size()) {
            std::vector<long> mu(rs.rank(), 0);
            int parts = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                parts += static_cast<int>(counts[r]);
                for (std::size_t j = 0; j < rs.rank(); ++j) mu[j] += counts[r] * roots[r]->root_coords[j];
            }
            ++tally[{mu, parts}];
            return;
        }
        const long h = roots[i]->height();
        for (long c = 0; c * h <= budget; ++c) {
            counts[i] = c;
            recurse(i + 1, budget - c * h);
        }
        counts[i] = 0;
    };
    recurse(0, max_height);
    return tally;
}

bool is_multiplicative_by_restriction(const RootSystem& rs, const std::vector<int>& assignment) {
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        int expected = 1;
        const auto& coords = rs.positive_roots()[k].root_coords;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            for (long t = 0; t < coords[i]; ++t) expected *= assignment[i];
        }
        if (assignment[k] != expected) return false;
    }
    return true;
}

}  // namespace dseries::oracle
