#pragma once

#include "dseries/realform.hpp"

#include <vector>

namespace dseries {

/// One B_K-orbit D_Q(w) inside a closed K-orbit: it lies in the Bruhat cell
/// C(w u) and has dimension l_K(w).
struct Stratum {
    WeylElement w;
    WeylElement cell;
    int dim = 0;
};

/// A closed K-orbit, modelled by the positive system of its B_K-fixed Borel.
struct ClosedOrbit {
    /// Entry k is +1 if positive root k of the reference system lies in this
    /// positive system and -1 if its negative does.
    std::vector<int> positive_system;
    /// The Weyl element with u(reference positive roots) = positive_system.
    WeylElement u;
    std::vector<Stratum> strata;
};

/// One orbit per positive system containing R_c^+, ordered by u's reduced
/// word. The count is |W| / |W_K|.
std::vector<ClosedOrbit> enumerate_closed_orbits(const EqualRankForm& form);

/// (w, w u, l_K(w)) for w in W_K, sorted by dimension then by the cell's word.
std::vector<Stratum> orbit_strata(const EqualRankForm& form, const WeylElement& u);

/// Index of the orbit whose u is the identity (it always exists).
std::size_t reference_orbit_index(const std::vector<ClosedOrbit>& orbits);

}  // namespace dseries
