#include "dseries/orbits.hpp"

#include "dseries/error.hpp"

#include <algorithm>

namespace dseries {

std::vector<Stratum> orbit_strata(const EqualRankForm& form, const WeylElement& u) {
    std::vector<Stratum> out;
    for (const WeylElement& w : form.k_weyl.elements()) {
        out.push_back(Stratum{w, form.weyl.compose(w, u), form.k_weyl.length_k(w)});
    }
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.cell.reduced_word() < b.cell.reduced_word();
    });
    return out;
}

std::vector<ClosedOrbit> enumerate_closed_orbits(const EqualRankForm& form) {
    const RootSystem& rs = form.roots;
    std::vector<ClosedOrbit> out;
    for (const WeylElement& w : form.weyl.elements()) {
        // w(Sigma^+) contains alpha iff w^{-1}(alpha) is positive.
        const WeylElement& w_inv = form.weyl.inverse(w);
        bool contains_compact = true;
        for (std::size_t a : form.grading.compact_positive()) {
            if (apply_to_root(rs, w_inv, a).sign < 0) {
                contains_compact = false;
                break;
            }
        }
        if (!contains_compact) continue;
        ClosedOrbit orbit;
        orbit.u = w;
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            orbit.positive_system.push_back(apply_to_root(rs, w_inv, k).sign);
        }
        orbit.strata = orbit_strata(form, w);
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end(), [](const ClosedOrbit& a, const ClosedOrbit& b) {
        return a.u.reduced_word() < b.u.reduced_word();
    });
    return out;
}

std::size_t reference_orbit_index(const std::vector<ClosedOrbit>& orbits) {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (orbits[i].u.length() == 0) return i;
    }
    throw Error(ErrorKind::InternalInvariant, "no closed orbit contains the reference Borel");
}

}  // namespace dseries
