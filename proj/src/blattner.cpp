#include "dseries/blattner.hpp"

#include "dseries/error.hpp"

#include <functional>

namespace dseries {

namespace {

bool all_zero(const std::vector<long>& v) {
    for (long x : v) {
        if (x != 0) return false;
    }
    return true;
}

bool any_negative(const std::vector<long>& v) {
    for (long x : v) {
        if (x < 0) return true;
    }
    return false;
}

Rational height(const RootSystem& rs, const Weight& mu) {
    Rational h = 0;
    for (const auto& c : rs.to_root_coords(mu)) h += c;
    return h;
}

long min_noncompact_height(const EqualRankForm& form) {
    long best = 0;
    for (std::size_t k : form.grading.noncompact_positive()) {
        long h = form.roots.positive_roots()[k].height();
        if (best == 0 || h < best) best = h;
    }
    return best;
}

[[noreturn]] void incompatible(const std::string& why) {
    throw Error(ErrorKind::ParameterIncompatible, why);
}

void require_blattner_parameters(const EqualRankForm& form, const Weight& lam, const Weight& nu) {
    const RootSystem& rs = form.roots;
    if (lam.rank() != rs.rank() || nu.rank() != rs.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "parameter rank does not match the root system");
    }
    if (!(lam + rs.rho()).is_integral()) incompatible("lambda + rho is not integral");
    WeightClass c = rs.classify(lam);
    if (!c.regular || !c.antidominant) incompatible("lambda is not regular antidominant");
    if (!nu.is_integral()) incompatible("nu " + nu.to_string() + " is not integral");
    for (std::size_t a : form.grading.compact_positive()) {
        if (rs.coroot_pairing(a, nu) > 0) {
            incompatible("nu " + nu.to_string() + " is not antidominant for the compact roots");
        }
    }
}

// lam - rho_n - w(nu - rho_c) for each w in W_K, in W_K order.
std::vector<Weight> blattner_arguments(const EqualRankForm& form, const Weight& lam, const Weight& nu) {
    const Weight base = lam - form.grading.rho_n();
    const Weight shifted = nu - form.grading.rho_c();
    std::vector<Weight> out;
    for (const WeylElement& w : form.k_weyl.elements()) out.push_back(base - w.act(shifted));
    return out;
}

// Visits every multiset of noncompact positive roots with at most p_max
// members, passing the sum kappa in fw coordinates.
void for_each_kappa(const EqualRankForm& form, int p_max, const std::function<void(const Weight&)>& visit) {
    std::vector<Weight> roots;
    for (std::size_t k : form.grading.noncompact_positive()) roots.push_back(form.roots.root_weight(k));
    Weight kappa(form.rank());
    std::function<void(std::size_t, int)> recurse = [&](std::size_t i, int remaining) {
        if (i == roots.size()) {
            visit(kappa);
            return;
        }
        recurse(i + 1, remaining);
        int taken = 0;
        while (taken < remaining) {
            kappa += roots[i];
            ++taken;
            recurse(i + 1, remaining - taken);
        }
        for (int t = 0; t < taken; ++t) kappa -= roots[i];
    };
    recurse(0, p_max);
}

}  // namespace

PartitionCounter::PartitionCounter(const RootSystem& rs, const CompactGrading& grading) : rs_(rs) {
    for (std::size_t k : grading.noncompact_positive()) roots_.push_back(rs.positive_roots()[k].root_coords);
}

long long PartitionCounter::count_from(const std::vector<long>& mu, std::size_t first) {
    if (any_negative(mu)) return 0;
    if (first == roots_.size()) return all_zero(mu) ? 1 : 0;
    auto key = std::make_pair(mu, first);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // Either no further copies of root `first`, or peel one off.
    std::vector<long> rest = mu;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots_[first][i];
    long long value = checked_add(count_from(mu, first + 1), count_from(rest, first));
    memo_.emplace(std::move(key), value);
    return value;
}

long long PartitionCounter::count_parts_from(const std::vector<long>& mu, std::size_t first, int p) {
    if (p < 0 || any_negative(mu)) return 0;
    if (first == roots_.size()) return all_zero(mu) && p == 0 ? 1 : 0;
    auto key = std::make_tuple(mu, first, p);
    if (auto it = memo_parts_.find(key); it != memo_parts_.end()) return it->second;
    std::vector<long> rest = mu;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots_[first][i];
    long long value = checked_add(count_parts_from(mu, first + 1, p), count_parts_from(rest, first, p - 1));
    memo_parts_.emplace(std::move(key), value);
    return value;
}

long long PartitionCounter::count(const Weight& mu) {
    auto coords = rs_.root_lattice_coords(mu);
    if (!coords) return 0;
    return count_from(*coords, 0);
}

long long PartitionCounter::count_parts(const Weight& mu, int p) {
    auto coords = rs_.root_lattice_coords(mu);
    if (!coords || p < 0) return 0;
    return count_parts_from(*coords, 0, p);
}

long long partition(const EqualRankForm& form, const Weight& mu) {
    PartitionCounter counter(form.roots, form.grading);
    return counter.count(mu);
}

long long partition_p(const EqualRankForm& form, const Weight& mu, int p) {
    PartitionCounter counter(form.roots, form.grading);
    return counter.count_parts(mu, p);
}

std::optional<BwbClass> bwb_cohomology(const EqualRankForm& form, const Weight& eta) {
    const RootSystem& rs = form.roots;
    for (std::size_t a : form.grading.compact_positive()) {
        if (rs.coroot_pairing(a, eta) == 0) return std::nullopt;
    }
    for (const WeylElement& w : form.k_weyl.elements()) {
        const Weight chamber = form.weyl.inverse(w).act(eta);
        bool antidominant = true;
        for (std::size_t a : form.grading.compact_positive()) {
            if (rs.coroot_pairing(a, chamber) > 0) {
                antidominant = false;
                break;
            }
        }
        if (antidominant) return BwbClass{form.k_weyl.length_k(w), chamber + form.grading.rho_c(), w};
    }
    throw Error(ErrorKind::InternalInvariant, "no W_K chamber contains a regular weight");
}

long long blattner_multiplicity(const EqualRankForm& form, PartitionCounter& counter, const Weight& lam,
                                const Weight& nu) {
    require_blattner_parameters(form, lam, nu);
    const std::vector<Weight> args = blattner_arguments(form, lam, nu);
    long long total = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
        const long long p = counter.count(args[k]);
        const int sign = form.k_weyl.length_k(form.k_weyl.elements()[k]) % 2 == 0 ? 1 : -1;
        total = checked_add(total, sign * p);
    }
    return total;
}

long long blattner_multiplicity(const EqualRankForm& form, const Weight& lam, const Weight& nu) {
    PartitionCounter counter(form.roots, form.grading);
    return blattner_multiplicity(form, counter, lam, nu);
}

int required_truncation(const EqualRankForm& form, const Weight& lam, const Weight& nu) {
    const long step = min_noncompact_height(form);
    if (step == 0) return 0;
    int bound = 0;
    for (const Weight& arg : blattner_arguments(form, lam, nu)) {
        Rational h = height(form.roots, arg);
        if (h <= 0) continue;
        mpz_class quotient = h.get_num() / (h.get_den() * step);
        bound = std::max(bound, static_cast<int>(quotient.get_si()));
    }
    return bound;
}

Weight filtration_line_bundle(const EqualRankForm& form, const Weight& lam, const Weight& kappa) {
    const Weight two_rho_n = Rational(2) * form.grading.rho_n();
    return lam + form.roots.rho() - two_rho_n - kappa;
}

long long filtration_oracle(const EqualRankForm& form, const Weight& lam, const Weight& nu, int p_max) {
    require_blattner_parameters(form, lam, nu);
    const int needed = required_truncation(form, lam, nu);
    if (p_max < needed) {
        throw Error(ErrorKind::TruncationTooSmall, "p_max = " + std::to_string(p_max) +
                                                       " but partitions need up to " +
                                                       std::to_string(needed) + " roots");
    }
    long long total = 0;
    for_each_kappa(form, p_max, [&](const Weight& kappa) {
        const Weight eta = filtration_line_bundle(form, lam, kappa) - form.grading.rho_c();
        auto cls = bwb_cohomology(form, eta);
        if (cls && cls->nu == nu) total = checked_add(total, cls->degree % 2 == 0 ? 1 : -1);
    });
    return total;
}

WeightBox WeightBox::parse(std::string_view text) {
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view part = rest.substr(0, comma);
        auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            throw Error(ErrorKind::InvalidConfig, "box coordinate '" + std::string(part) + "' is not lo..hi");
        }
        lo.push_back(parse_rational(part.substr(0, dots)));
        hi.push_back(parse_rational(part.substr(dots + 2)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return WeightBox{Weight(std::move(lo)), Weight(std::move(hi))};
}

std::vector<Weight> WeightBox::integer_points() const {
    if (lo.rank() != hi.rank()) throw Error(ErrorKind::DimensionMismatch, "box corners differ in rank");
    const std::size_t n = lo.rank();
    std::vector<long> first(n);
    std::vector<long> last(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class f;
        mpz_class l;
        mpz_cdiv_q(f.get_mpz_t(), lo[i].get_num_mpz_t(), lo[i].get_den_mpz_t());
        mpz_fdiv_q(l.get_mpz_t(), hi[i].get_num_mpz_t(), hi[i].get_den_mpz_t());
        if (f > l) return {};
        first[i] = f.get_si();
        last[i] = l.get_si();
    }
    std::vector<Weight> out;
    std::vector<long> point = first;
    while (true) {
        out.push_back(Weight::from_integers(point));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (point[i] < last[i]) {
                ++point[i];
                break;
            }
            point[i] = first[i];
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

namespace {

bool compact_antidominant(const EqualRankForm& form, const Weight& nu) {
    for (std::size_t a : form.grading.compact_positive()) {
        if (form.roots.coroot_pairing(a, nu) > 0) return false;
    }
    return true;
}

}  // namespace

KTypeTable ktype_table(const EqualRankForm& form, const Weight& lam, const WeightBox& box) {
    PartitionCounter counter(form.roots, form.grading);
    KTypeTable table;
    for (const Weight& nu : box.integer_points()) {
        if (!compact_antidominant(form, nu)) continue;
        long long m = blattner_multiplicity(form, counter, lam, nu);
        if (m != 0) table.entries.emplace(nu, m);
    }
    return table;
}

KTypeTable filtration_oracle_table(const EqualRankForm& form, const Weight& lam, const WeightBox& box) {
    std::map<Weight, long long> wanted;
    int p_max = 0;
    for (const Weight& nu : box.integer_points()) {
        if (!compact_antidominant(form, nu)) continue;
        require_blattner_parameters(form, lam, nu);
        wanted.emplace(nu, 0);
        p_max = std::max(p_max, required_truncation(form, lam, nu));
    }
    if (wanted.empty()) return {};
    for_each_kappa(form, p_max, [&](const Weight& kappa) {
        const Weight eta = filtration_line_bundle(form, lam, kappa) - form.grading.rho_c();
        auto cls = bwb_cohomology(form, eta);
        if (!cls) return;
        auto it = wanted.find(cls->nu);
        if (it != wanted.end()) it->second = checked_add(it->second, cls->degree % 2 == 0 ? 1 : -1);
    });
    KTypeTable table;
    for (const auto& [nu, m] : wanted) {
        if (m != 0) table.entries.emplace(nu, m);
    }
    return table;
}

}  // namespace dseries
