#pragma once

// Brute-force reference computations. Each one re-derives a quantity along a
// path that shares no code with the routine it checks.

#include "dseries/realform.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace dseries::oracle {

/// Positive roots (simple-root coordinates) by depth-first reflection
/// closure, applying generators in reverse order.
std::set<std::vector<long>> positive_roots_dfs(const IntMatrix& cartan);

/// |W| by closing the simple-reflection matrices under left multiplication.
std::size_t weyl_order_by_left_closure(const IntMatrix& cartan);

/// Tallies every tuple (n_beta) of nonnegative integers over the noncompact
/// positive roots whose total height is at most max_height. Keys are
/// (simple-root coordinates, number of roots used).
std::map<std::pair<std::vector<long>, int>, long long> enumerate_partitions(const EqualRankForm& form,
                                                                           long max_height);

/// An assignment is multiplicative iff it equals the multiplicative extension
/// of its own values on the simple roots.
bool is_multiplicative_by_restriction(const RootSystem& rs, const std::vector<int>& assignment);

}  // namespace dseries::oracle
