#include "dseries/realform.hpp"

#include "dseries/error.hpp"

#include <set>

namespace dseries {

CompactGrading build_grading(const RootSystem& rs, std::span<const int> simple_signs) {
    if (simple_signs.size() != rs.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "need one sign per simple root");
    }
    CompactGrading g;
    g.simple_signs_.assign(simple_signs.begin(), simple_signs.end());
    for (int s : g.simple_signs_) {
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidConfig, "simple signs must be +1 or -1");
    }
    g.rho_c_ = Weight(rs.rank());
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const Root& alpha = rs.positive_roots()[k];
        int sign = 1;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (g.simple_signs_[i] < 0 && alpha.root_coords[i] % 2 != 0) sign = -sign;
        }
        g.signs_.push_back(sign);
        if (sign > 0) {
            g.compact_.push_back(k);
            g.rho_c_ += alpha.weight();
        } else {
            g.noncompact_.push_back(k);
        }
    }
    g.rho_c_ *= Rational(1, 2);
    g.rho_n_ = rs.rho() - g.rho_c_;
    return g;
}

CompactGrading build_grading(const RootSystem& rs, const std::vector<bool>& compact_simple) {
    std::vector<int> signs;
    for (bool c : compact_simple) signs.push_back(c ? 1 : -1);
    return build_grading(rs, signs);
}

bool validate_grading(const RootSystem& rs, std::span<const int> assignment) {
    const std::size_t n = rs.num_positive_roots();
    if (assignment.size() != n) {
        throw Error(ErrorKind::IncompleteAssignment,
                    "assignment covers " + std::to_string(assignment.size()) + " of " +
                        std::to_string(n) + " positive roots");
    }
    for (int s : assignment) {
        if (s != 1 && s != -1) {
            throw Error(ErrorKind::IncompleteAssignment, "assignment entries must be +1 or -1");
        }
    }
    // Any relation alpha + beta = gamma among roots can be rewritten with all
    // three positive, so positive pairs cover every root sum.
    const auto& roots = rs.positive_roots();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<long> sum = roots[a].root_coords;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += roots[b].root_coords[i];
            auto gamma = rs.find_by_root_coords(sum);
            if (!gamma) continue;
            if (assignment[gamma->index] != assignment[a] * assignment[b]) return false;
        }
    }
    return true;
}

int KWeylData::length_k(const WeylElement& w) const {
    int l = length_k_.at(w.index());
    if (l < 0) {
        throw Error(ErrorKind::InternalInvariant, "element " + w.word_string() + " is not in W_K");
    }
    return l;
}

KWeylData weyl_k(const RootSystem& rs, const CompactGrading& grading, const WeylGroup& W) {
    KWeylData k;
    k.dim_q_ = static_cast<int>(grading.compact_positive().size());
    k.length_k_.assign(W.order(), -1);

    std::set<std::size_t> compact(grading.compact_positive().begin(), grading.compact_positive().end());
    for (std::size_t a : grading.compact_positive()) {
        bool decomposable = false;
        for (std::size_t b : grading.compact_positive()) {
            std::vector<long> rest = rs.positive_roots()[a].root_coords;
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= rs.positive_roots()[b].root_coords[i];
            auto c = rs.find_by_root_coords(rest);
            if (c && c->sign > 0 && compact.count(c->index)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) k.simple_k_.push_back(a);
    }

    std::vector<const WeylElement*> generators;
    for (std::size_t a : grading.compact_positive()) generators.push_back(&W.reflection(rs, a));

    std::vector<bool> seen(W.order(), false);
    std::vector<const WeylElement*> members{&W.identity()};
    seen[W.identity().index()] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (const WeylElement* s : generators) {
            const WeylElement& next = W.compose(*members[head], *s);
            if (seen[next.index()]) continue;
            seen[next.index()] = true;
            members.push_back(&next);
        }
    }
    for (const WeylElement* w : members) {
        int l = 0;
        for (std::size_t a : grading.compact_positive()) {
            SignedRoot image = apply_to_root(rs, *w, a);
            if (!compact.count(image.index)) {
                throw Error(ErrorKind::InternalInvariant, "W_K does not preserve the compact roots");
            }
            if (image.sign < 0) ++l;
        }
        k.length_k_[w->index()] = l;
        k.elements_.push_back(*w);
    }
    return k;
}

EqualRankForm EqualRankForm::make(RootSystem rs, std::span<const int> simple_signs) {
    WeylGroup W = WeylGroup::generate(rs);
    CompactGrading g = build_grading(rs, simple_signs);
    KWeylData k = weyl_k(rs, g, W);
    return EqualRankForm{std::move(rs), std::move(W), std::move(g), std::move(k)};
}

EqualRankForm EqualRankForm::make(const IntMatrix& cartan, const std::vector<bool>& compact_simple) {
    RootSystem rs = RootSystem::build(cartan);
    if (compact_simple.size() != rs.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "compact_simple must have one entry per simple root");
    }
    std::vector<int> signs;
    for (bool c : compact_simple) signs.push_back(c ? 1 : -1);
    return make(std::move(rs), signs);
}

}  // namespace dseries
