#include "dseries/homology.hpp"

#include "dseries/error.hpp"

namespace dseries {

HomologyTable kostant_table(const RootSystem& rs, const WeylGroup& W, const Weight& lam) {
    require_integral_antidominant(rs, lam);
    const Weight shifted = lam - rs.rho();
    HomologyTable table;
    for (const WeylElement& w : W.elements()) table.add(w.length(), w.act(shifted) + rs.rho());
    return table;
}

HomologyTable schmid_table(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam) {
    const RootSystem& rs = form.roots;
    require_discrete_parameter(rs, lam);
    const int q = form.grading.q();
    HomologyTable table;
    for (const WeylElement& w : form.k_weyl.elements()) {
        const WeylElement& wu = form.weyl.compose(w, orbit.u);
        table.add(q - wu.length() + 2 * form.k_weyl.length_k(w), wu.act(lam) + rs.rho());
    }
    return table;
}

ResolutionIndex bgg_terms(const RootSystem& rs, const WeylGroup& W, const Weight& lam) {
    require_integral_antidominant(rs, lam);
    const int dim_x = static_cast<int>(rs.num_positive_roots());
    const Weight shifted = lam - rs.rho();
    ResolutionIndex index;
    index.kind = ResolutionKind::bgg;
    index.u = W.identity();
    for (const WeylElement& w : W.elements()) {
        index.terms[dim_x - w.length()].push_back(ResolutionTerm{w, w.act(shifted)});
    }
    return index;
}

ResolutionIndex trauber_terms(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam) {
    require_discrete_parameter(form.roots, lam);
    const int dim_q = form.k_weyl.dim_q();
    ResolutionIndex index;
    index.kind = ResolutionKind::trauber;
    index.u = orbit.u;
    for (const WeylElement& w : form.k_weyl.elements()) {
        const WeylElement& wu = form.weyl.compose(w, orbit.u);
        index.terms[dim_q - form.k_weyl.length_k(w)].push_back(ResolutionTerm{w, wu.act(lam)});
    }
    return index;
}

Weight TermHomology::weight(const RootSystem& rs, const Weight& lam) const {
    switch (rule) {
        case WeightRule::shifted: return acting.act(lam - rs.rho()) + rs.rho();
        case WeightRule::linear: return acting.act(lam) + rs.rho();
    }
    throw Error(ErrorKind::InternalInvariant, "unknown weight rule");
}

TermHomology term_homology_degree(ResolutionKind kind, const WeylGroup& W, const KWeylData& k_weyl,
                                  const WeylElement& w, const WeylElement& u,
                                  const ResolutionGeometry& geom) {
    if (kind == ResolutionKind::bgg) {
        return TermHomology{geom.dim_x, WeightRule::shifted, w};
    }
    const WeylElement& wu = W.compose(w, u);
    return TermHomology{geom.dim_x - wu.length() + k_weyl.length_k(w), WeightRule::linear, wu};
}

HomologyTable collapse(const std::vector<ComponentTerms>& components) {
    HomologyTable table;
    for (const ComponentTerms& component : components) {
        const TermClass* found = nullptr;
        int position = 0;
        for (const auto& [p, cls] : component) {
            if (!cls) continue;
            if (found) {
                throw Error(ErrorKind::CollapseAmbiguous,
                            "weight component has nonvanishing terms at positions " +
                                std::to_string(position) + " and " + std::to_string(p));
            }
            found = &*cls;
            position = p;
        }
        if (found) table.add(found->degree - position, found->weight);
    }
    return table;
}

namespace {

// One component per v in W: the part of each resolution term whose n-homology
// lives in the weight attached to v.
HomologyTable collapse_by_component(const RootSystem& rs, const WeylGroup& W, const KWeylData& k_weyl,
                                    const ResolutionIndex& index, const ResolutionGeometry& geom,
                                    const Weight& lam) {
    std::vector<ComponentTerms> components;
    for (const WeylElement& v : W.elements()) {
        ComponentTerms component;
        for (const auto& [p, terms] : index.terms) {
            std::optional<TermClass> cls;
            for (const ResolutionTerm& term : terms) {
                TermHomology h = term_homology_degree(index.kind, W, k_weyl, term.label, index.u, geom);
                if (!(h.acting == v)) continue;
                if (cls) {
                    throw Error(ErrorKind::CollapseAmbiguous, "two terms at one position share a component");
                }
                cls = TermClass{h.degree, h.weight(rs, lam)};
            }
            component.emplace(p, std::move(cls));
        }
        components.push_back(std::move(component));
    }
    return collapse(components);
}

}  // namespace

HomologyTable kostant_via_bgg(const RootSystem& rs, const WeylGroup& W, const Weight& lam) {
    ResolutionIndex index = bgg_terms(rs, W, lam);
    ResolutionGeometry geom{static_cast<int>(rs.num_positive_roots()), 0, 0};
    // BGG terms never consult l_K; an empty W_K record keeps the signature uniform.
    return collapse_by_component(rs, W, KWeylData{}, index, geom, lam);
}

HomologyTable schmid_via_trauber(const EqualRankForm& form, const ClosedOrbit& orbit, const Weight& lam) {
    ResolutionIndex index = trauber_terms(form, orbit, lam);
    ResolutionGeometry geom{form.dim_x(), form.k_weyl.dim_q(), form.grading.q()};
    return collapse_by_component(form.roots, form.weyl, form.k_weyl, index, geom, lam);
}

}  // namespace dseries
