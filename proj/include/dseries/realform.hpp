#pragma once

#include "dseries/rootdatum.hpp"
#include "dseries/weylgroup.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dseries {

/// Compact (+1) / noncompact (-1) grading of the roots of an equal-rank real
/// form. Multiplicative on root sums and even under alpha -> -alpha.
class CompactGrading {
public:
    const std::vector<int>& simple_signs() const { return simple_signs_; }
    /// Sign of positive root k (negative roots carry the same sign).
    int sign_of(std::size_t root_index) const { return signs_.at(root_index); }
    bool is_compact(std::size_t root_index) const { return sign_of(root_index) > 0; }
    const std::vector<int>& signs() const { return signs_; }
    const std::vector<std::size_t>& compact_positive() const { return compact_; }
    const std::vector<std::size_t>& noncompact_positive() const { return noncompact_; }
    const Weight& rho_c() const { return rho_c_; }
    const Weight& rho_n() const { return rho_n_; }
    /// Half the number of noncompact roots.
    int q() const { return static_cast<int>(noncompact_.size()); }

    friend CompactGrading build_grading(const RootSystem& rs, std::span<const int> simple_signs);

private:
    std::vector<int> simple_signs_;
    std::vector<int> signs_;
    std::vector<std::size_t> compact_;
    std::vector<std::size_t> noncompact_;
    Weight rho_c_;
    Weight rho_n_;
};

/// Extends signs on the simple roots multiplicatively:
/// sign(sum n_i alpha_i) = prod sign_i^{n_i}.
CompactGrading build_grading(const RootSystem& rs, std::span<const int> simple_signs);
CompactGrading build_grading(const RootSystem& rs, const std::vector<bool>& compact_simple);

/// Checks a hand-entered assignment (one entry per positive root, +1 or -1)
/// for multiplicativity on every root sum. A 0 entry or wrong length throws
/// IncompleteAssignment.
bool validate_grading(const RootSystem& rs, std::span<const int> assignment);

/// The Weyl group W_K of the compact roots, as a subgroup of W.
class KWeylData {
public:
    /// Elements of W_K in breadth-first order from the identity.
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const WeylElement& w) const { return length_k_.at(w.index()) >= 0; }
    /// Number of compact positive roots sent to negative roots.
    int length_k(const WeylElement& w) const;
    /// Indecomposable elements of R_c^+.
    const std::vector<std::size_t>& simple_k() const { return simple_k_; }
    /// dim of the flag variety of K, i.e. |R_c^+|.
    int dim_q() const { return dim_q_; }

    friend KWeylData weyl_k(const RootSystem& rs, const CompactGrading& grading, const WeylGroup& W);

private:
    std::vector<WeylElement> elements_;
    std::vector<int> length_k_;  // indexed by W index, -1 outside W_K
    std::vector<std::size_t> simple_k_;
    int dim_q_ = 0;
};

KWeylData weyl_k(const RootSystem& rs, const CompactGrading& grading, const WeylGroup& W);

/// Everything that depends only on (Cartan matrix, compact simple roots).
struct EqualRankForm {
    RootSystem roots;
    WeylGroup weyl;
    CompactGrading grading;
    KWeylData k_weyl;

    static EqualRankForm make(const IntMatrix& cartan, const std::vector<bool>& compact_simple);
    static EqualRankForm make(RootSystem rs, std::span<const int> simple_signs);

    std::size_t rank() const { return roots.rank(); }
    int dim_x() const { return static_cast<int>(roots.num_positive_roots()); }
};

}  // namespace dseries
