#pragma once

#include "dseries/realform.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace dseries {

/// Counts ways of writing a weight as a sum of noncompact positive roots,
/// where a "way" is a multiset of roots (a tuple of nonnegative integers
/// n_beta with sum n_beta beta = mu). Memoised; not thread-safe, so give each
/// thread its own counter.
class PartitionCounter {
public:
    PartitionCounter(const RootSystem& rs, const CompactGrading& grading);

    /// P(mu). Zero off the root lattice and off the noncompact cone; P(0) = 1.
    long long count(const Weight& mu);
    /// P_p(mu): only sums of exactly p roots.
    long long count_parts(const Weight& mu, int p);

private:
    long long count_from(const std::vector<long>& mu, std::size_t first);
    long long count_parts_from(const std::vector<long>& mu, std::size_t first, int p);

    const RootSystem& rs_;
    std::vector<std::vector<long>> roots_;
    std::map<std::pair<std::vector<long>, std::size_t>, long long> memo_;
    std::map<std::tuple<std::vector<long>, std::size_t, int>, long long> memo_parts_;
};

long long partition(const EqualRankForm& form, const Weight& mu);
long long partition_p(const EqualRankForm& form, const Weight& mu, int p);

/// The unique nonvanishing sheaf cohomology of a line bundle on the closed
/// orbit, recorded by its shifted parameter eta: H^degree = F_nu with
/// eta = w (nu - rho_c), degree = l_K(w).
struct BwbClass {
    int degree = 0;
    Weight nu;
    WeylElement w;
};

/// nullopt when eta is singular for the compact roots.
std::optional<BwbClass> bwb_cohomology(const EqualRankForm& form, const Weight& eta);

/// Multiplicity of the K-type with lowest weight nu:
/// sum_{w in W_K} (-1)^{l_K(w)} P(lam - rho_n - w(nu - rho_c)).
/// Throws ParameterIncompatible unless lam is regular antidominant with
/// lam + rho integral and nu is integral and R_c^+-antidominant.
long long blattner_multiplicity(const EqualRankForm& form, const Weight& lam, const Weight& nu);
long long blattner_multiplicity(const EqualRankForm& form, PartitionCounter& counter, const Weight& lam,
                                const Weight& nu);

/// Smallest p_max for which no partition of any argument
/// lam - rho_n - w(nu - rho_c) uses more than p_max roots. The bound is the
/// height of the argument divided by the least height of a noncompact root.
int required_truncation(const EqualRankForm& form, const Weight& lam, const Weight& nu);

/// Twist of tau = O(lam + rho) by omega^{-1} = O(-2 rho_n) and O(-kappa).
Weight filtration_line_bundle(const EqualRankForm& form, const Weight& lam, const Weight& kappa);

/// Re-derives the multiplicity by summing over the graded pieces of the
/// normal-degree filtration: every kappa that is a sum of s <= p_max
/// noncompact positive roots (with repetition) contributes (-1)^q when the
/// cohomology of its line bundle is F_nu in degree q. Throws
/// TruncationTooSmall if p_max < required_truncation.
long long filtration_oracle(const EqualRankForm& form, const Weight& lam, const Weight& nu, int p_max);

/// Integer points of a coordinate box [lo_i, hi_i]; rational bounds are
/// rounded inward.
struct WeightBox {
    Weight lo;
    Weight hi;

    /// "lo..hi" per coordinate, comma separated: "-8..0,-8..0".
    static WeightBox parse(std::string_view text);
    std::vector<Weight> integer_points() const;
};

struct KTypeTable {
    std::map<Weight, long long> entries;
};

/// Multiplicities of all R_c^+-antidominant integral nu in the box; zero
/// entries omitted.
KTypeTable ktype_table(const EqualRankForm& form, const Weight& lam, const WeightBox& box);

/// The filtration oracle over a whole box at once: one pass over kappa, with
/// contributions bucketed by nu. Zero entries omitted.
KTypeTable filtration_oracle_table(const EqualRankForm& form, const Weight& lam, const WeightBox& box);

}  // namespace dseries
