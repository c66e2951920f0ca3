#pragma once

#include "dseries/charring.hpp"
#include "dseries/orbits.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dseries {

/// H_p(n, F) for the irreducible F with lowest weight lam:
/// rows[p] = { w(lam - rho) + rho : l(w) = p }.
HomologyTable kostant_table(const RootSystem& rs, const WeylGroup& W, const Weight& lam);

/// H_p(n, V) for the discrete series attached to (orbit, lam): weight
/// w u lam + rho in degree q - l(w u) + 2 l_K(w) for each w in W_K.
HomologyTable schmid_table(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam);

enum class ResolutionKind { bgg, trauber };

struct ResolutionTerm {
    /// w in W (BGG) or w in W_K (Trauber).
    WeylElement label;
    /// w(lam - rho) for BGG; w u lam for Trauber.
    Weight weight_param;
};

/// Term indexing of a resolution: position p -> its summands.
struct ResolutionIndex {
    ResolutionKind kind = ResolutionKind::bgg;
    /// The element u of the orbit (identity for BGG).
    WeylElement u;
    std::map<int, std::vector<ResolutionTerm>> terms;
};

/// C^p = sum over W(dim X - p) of dual Verma modules I(w(lam - rho)).
ResolutionIndex bgg_terms(const RootSystem& rs, const WeylGroup& W, const Weight& lam);
/// D^p = sum over {w in W_K : l_K(w) = dim Q - p} of J(w, lam).
ResolutionIndex trauber_terms(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam);

struct ResolutionGeometry {
    int dim_x = 0;
    int dim_q = 0;
    int q = 0;
};

enum class WeightRule {
    /// w(lam - rho) + rho
    shifted,
    /// (w u) lam + rho
    linear,
};

/// The single nonvanishing n-homology class of one resolution term.
struct TermHomology {
    int degree = 0;
    WeightRule rule = WeightRule::shifted;
    /// The Weyl element in the weight rule: w for BGG, w u for Trauber.
    WeylElement acting;

    Weight weight(const RootSystem& rs, const Weight& lam) const;
};

/// BGG term w: degree dim X. Trauber term w: degree dim X - l(w u) + l_K(w).
TermHomology term_homology_degree(ResolutionKind kind, const WeylGroup& W, const KWeylData& k_weyl,
                                  const WeylElement& w, const WeylElement& u,
                                  const ResolutionGeometry& geom);

struct TermClass {
    int degree = 0;
    Weight weight;
};

/// For one weight component: resolution position -> the class it contributes
/// (nullopt when that term's homology vanishes in this component).
using ComponentTerms = std::map<int, std::optional<TermClass>>;

/// Collapses each component onto its unique nonvanishing position p0: the
/// final degree is the term degree shifted by [-p0], i.e. degree - p0.
/// Throws CollapseAmbiguous if a component has two nonvanishing positions.
HomologyTable collapse(const std::vector<ComponentTerms>& components);

/// bgg_terms -> term_homology_degree -> collapse, one component per v in W.
HomologyTable kostant_via_bgg(const RootSystem& rs, const WeylGroup& W, const Weight& lam);
/// trauber_terms -> term_homology_degree -> collapse, one component per v in W.
HomologyTable schmid_via_trauber(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam);

}  // namespace dseries
