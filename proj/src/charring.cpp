#include "dseries/charring.hpp"

#include "dseries/error.hpp"

#include <algorithm>
#include <deque>

namespace dseries {

FormalCharacter FormalCharacter::monomial(const Weight& mu, long long coeff) {
    FormalCharacter out;
    out.add_term(mu, coeff);
    return out;
}

FormalCharacter FormalCharacter::one(std::size_t rank) {
    return monomial(Weight(rank), 1);
}

void FormalCharacter::add_term(const Weight& mu, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, coeff);
    if (inserted) return;
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

long long FormalCharacter::coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
    for (const auto& [mu, c] : other.terms_) add_term(mu, c);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& other) {
    for (const auto& [mu, c] : other.terms_) add_term(mu, checked_mul(c, -1));
    return *this;
}

FormalCharacter& FormalCharacter::operator*=(long long factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c = checked_mul(c, factor);
    return *this;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out;
    for (const auto& [mu, c] : a.terms_) {
        for (const auto& [nu, d] : b.terms_) out.add_term(mu + nu, checked_mul(c, d));
    }
    return out;
}

void HomologyTable::add(int degree, const Weight& mu) {
    if (degree < 0) {
        throw Error(ErrorKind::InternalInvariant, "negative homological degree " + std::to_string(degree));
    }
    auto& row = rows_[degree];
    row.insert(std::upper_bound(row.begin(), row.end(), mu), mu);
}

std::size_t HomologyTable::total() const {
    std::size_t n = 0;
    for (const auto& [p, row] : rows_) n += row.size();
    return n;
}

void require_integral_antidominant(const RootSystem& rs, const Weight& lam) {
    WeightClass c = rs.classify(lam);
    if (!c.integral) throw Error(ErrorKind::NotIntegral, "weight " + lam.to_string() + " is not integral");
    if (!c.antidominant) {
        throw Error(ErrorKind::NotAntidominant, "weight " + lam.to_string() + " is not antidominant");
    }
}

void require_discrete_parameter(const RootSystem& rs, const Weight& lam) {
    WeightClass c = rs.classify(lam);
    if (!c.strongly_antidominant || !c.regular) {
        throw Error(ErrorKind::NotStronglyAntidominant,
                    "weight " + lam.to_string() + " is not regular strongly antidominant");
    }
    if (!(lam + rs.rho()).is_integral()) {
        throw Error(ErrorKind::NotCompatible,
                    "lambda + rho is not integral for lambda = " + lam.to_string());
    }
}

FormalCharacter weyl_denominator(const RootSystem& rs) {
    FormalCharacter out = FormalCharacter::one(rs.rank());
    for (const Root& alpha : rs.positive_roots()) {
        FormalCharacter factor = FormalCharacter::one(rs.rank());
        factor.add_term(alpha.weight(), -1);
        out = out * factor;
    }
    return out;
}

FormalCharacter weyl_denominator_by_subsets(const RootSystem& rs) {
    const std::size_t n = rs.num_positive_roots();
    if (n >= 63) throw Error(ErrorKind::Overflow, "too many positive roots for subset expansion");
    std::vector<Weight> weights;
    for (const Root& alpha : rs.positive_roots()) weights.push_back(alpha.weight());

    FormalCharacter out;
    for (std::size_t p = 0; p <= n; ++p) {
        const long long sign = p % 2 == 0 ? 1 : -1;
        // Subsets of size p, visited in increasing bitmask order.
        std::vector<bool> chosen(n, false);
        std::fill(chosen.end() - static_cast<std::ptrdiff_t>(p), chosen.end(), true);
        do {
            Weight sum(rs.rank());
            for (std::size_t k = 0; k < n; ++k) {
                if (chosen[k]) sum += weights[k];
            }
            out.add_term(sum, sign);
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return out;
}

FormalCharacter weyl_numerator(const RootSystem& rs, const WeylGroup& W, const Weight& lam) {
    require_integral_antidominant(rs, lam);
    const Weight shifted = lam - rs.rho();
    FormalCharacter out;
    for (const WeylElement& w : W.elements()) out.add_term(w.act(shifted) + rs.rho(), w.sign());
    return out;
}

namespace {

// d_i = (alpha_i, alpha_i) / 2 for an invariant form, normalised to 1 on one
// node of each component.
std::vector<Rational> symmetrizer(const IntMatrix& c) {
    const std::size_t n = c.size();
    std::vector<Rational> d(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || c[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * c[i][j] / Rational(c[j][i]);
                queue.push_back(j);
            }
        }
    }
    return d;
}

class InvariantForm {
public:
    explicit InvariantForm(const RootSystem& rs) : rs_(rs), d_(symmetrizer(rs.cartan())) {}

    // (lam, mu) = sum_i (lam in root coords)_i d_i mu_i, since (alpha_i, omega_j) = d_i delta_ij.
    Rational operator()(const Weight& lam, const Weight& mu) const {
        std::vector<Rational> root = rs_.to_root_coords(lam);
        Rational out = 0;
        for (std::size_t i = 0; i < root.size(); ++i) out += root[i] * d_[i] * mu[i];
        return out;
    }

private:
    const RootSystem& rs_;
    std::vector<Rational> d_;
};

Weight dominant_representative(const RootSystem& rs, Weight lam) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (lam[i] < 0) {
                lam = rs.reflect_simple(i, lam);
                moved = true;
            }
        }
    }
    return lam;
}

}  // namespace

FormalCharacter freudenthal_character(const RootSystem& rs, const Weight& lam_lowest) {
    require_integral_antidominant(rs, lam_lowest);
    const Weight highest = dominant_representative(rs, lam_lowest);
    const InvariantForm form(rs);
    const Weight& rho = rs.rho();
    const Rational top = form(highest + rho, highest + rho);

    std::vector<Weight> roots;
    std::vector<long> root_height;
    for (const Root& alpha : rs.positive_roots()) {
        roots.push_back(alpha.weight());
        root_height.push_back(alpha.height());
    }

    std::map<Weight, long long> mult{{highest, 1}};
    std::vector<Weight> level{highest};
    long depth = 0;
    while (!level.empty()) {
        ++depth;
        std::vector<Weight> candidates;
        for (const Weight& mu : level) {
            for (std::size_t i = 0; i < rs.rank(); ++i) candidates.push_back(mu - roots[i]);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<Weight> next;
        for (const Weight& mu : candidates) {
            const Rational denom = top - form(mu + rho, mu + rho);
            if (denom == 0) continue;
            Rational sum = 0;
            for (std::size_t a = 0; a < roots.size(); ++a) {
                Weight shifted = mu;
                for (long k = 1; k * root_height[a] <= depth; ++k) {
                    shifted += roots[a];
                    auto it = mult.find(shifted);
                    if (it == mult.end()) continue;
                    sum += Rational(static_cast<long>(it->second)) * form(shifted, roots[a]);
                }
            }
            Rational m = 2 * sum / denom;
            if (m == 0) continue;
            if (m < 0 || m.get_den() != 1 || !m.get_num().fits_slong_p()) {
                throw Error(ErrorKind::InternalInvariant,
                            "Freudenthal recursion produced a non-integral multiplicity");
            }
            mult.emplace(mu, m.get_num().get_si());
            next.push_back(mu);
        }
        level = std::move(next);
    }

    FormalCharacter out;
    for (const auto& [mu, m] : mult) out.add_term(mu, m);
    return out;
}

FormalCharacter discrete_numerator(const EqualRankForm& form, const Weight& lam) {
    const RootSystem& rs = form.roots;
    require_discrete_parameter(rs, lam);
    const long long global = form.grading.q() % 2 == 0 ? 1 : -1;
    FormalCharacter out;
    for (const WeylElement& w : form.k_weyl.elements()) {
        const long long sign = form.k_weyl.length_k(w) % 2 == 0 ? 1 : -1;
        out.add_term(w.act(lam) + rs.rho(), global * sign);
    }
    return out;
}

FormalCharacter euler_character(const HomologyTable& table) {
    FormalCharacter out;
    for (const auto& [p, row] : table.rows()) {
        for (const Weight& mu : row) out.add_term(mu, p % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace dseries
