#pragma once

#include "dseries/realform.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace dseries {

/// A finitely supported integer combination of exponentials e^mu, i.e. a
/// Laurent polynomial over the weight lattice. Zero coefficients are never
/// stored; iteration is in lexicographic weight order.
class FormalCharacter {
public:
    using Terms = std::map<Weight, long long>;

    FormalCharacter() = default;
    static FormalCharacter monomial(const Weight& mu, long long coeff = 1);
    /// The constant 1 = e^0 in the given rank.
    static FormalCharacter one(std::size_t rank);

    void add_term(const Weight& mu, long long coeff);
    long long coefficient(const Weight& mu) const;

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    FormalCharacter& operator+=(const FormalCharacter& other);
    FormalCharacter& operator-=(const FormalCharacter& other);
    FormalCharacter& operator*=(long long factor);
    friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
    friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
    friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) = default;

private:
    Terms terms_;
};

/// Weights of n-homology by degree. Rows are sorted multisets; empty rows are
/// never stored.
class HomologyTable {
public:
    void add(int degree, const Weight& mu);
    const std::map<int, std::vector<Weight>>& rows() const { return rows_; }
    std::size_t total() const;
    bool empty() const { return rows_.empty(); }
    friend bool operator==(const HomologyTable& a, const HomologyTable& b) = default;

private:
    std::map<int, std::vector<Weight>> rows_;
};

/// prod_{alpha > 0} (1 - e^alpha), multiplied out factor by factor.
FormalCharacter weyl_denominator(const RootSystem& rs);
/// The same element as the signed sum over subsets P of positive roots of
/// prod_{alpha in P} (-e^alpha), grouped by |P| as the exterior powers of n.
FormalCharacter weyl_denominator_by_subsets(const RootSystem& rs);

/// sum_w (-1)^{l(w)} e^{w(lam - rho) + rho}. lam must be integral antidominant.
FormalCharacter weyl_numerator(const RootSystem& rs, const WeylGroup& W, const Weight& lam);

/// Full character of the irreducible module with lowest weight lam, by
/// Freudenthal's recursion from the highest weight. Uses only the Cartan
/// matrix and positive roots; no Weyl group.
FormalCharacter freudenthal_character(const RootSystem& rs, const Weight& lam_lowest);

/// (-1)^q sum_{w in W_K} (-1)^{l_K(w)} e^{w lam + rho}: the numerator of the
/// discrete series character on the compact Cartan for the orbit of the
/// reference Borel. lam must be regular strongly antidominant with lam + rho
/// integral.
FormalCharacter discrete_numerator(const EqualRankForm& form, const Weight& lam);

/// sum_p (-1)^p sum_{mu in rows[p]} e^mu.
FormalCharacter euler_character(const HomologyTable& table);

/// Precondition helpers shared with the homology module.
void require_integral_antidominant(const RootSystem& rs, const Weight& lam);
void require_discrete_parameter(const RootSystem& rs, const Weight& lam);

}  // namespace dseries
