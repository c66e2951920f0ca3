#include "dseries/rootdatum.hpp"

#include "dseries/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace dseries {

namespace {

[[noreturn]] void not_finite(const std::string& why) {
    throw Error(ErrorKind::NotFiniteType, "Cartan matrix is not of finite type: " + why);
}

void validate_shape(const IntMatrix& c) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) {
            throw Error(ErrorKind::InvalidCartan, "Cartan matrix is not square");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && c[i][j] != 2) {
                throw Error(ErrorKind::InvalidCartan, "Cartan matrix diagonal must be 2");
            }
            if (i != j && c[i][j] > 0) {
                throw Error(ErrorKind::InvalidCartan, "Cartan matrix off-diagonal entries must be <= 0");
            }
            if (i != j && (c[i][j] == 0) != (c[j][i] == 0)) {
                throw Error(ErrorKind::InvalidCartan, "Cartan matrix zero pattern must be symmetric");
            }
        }
    }
}

// Symmetrizable with a positive definite symmetrization is exactly finite
// type; checking it up front keeps the closure from chasing coordinates that
// grow without bound.
void require_finite_type(const IntMatrix& c) {
    const std::size_t n = c.size();
    std::vector<Rational> d(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        d[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || c[i][j] == 0) continue;
                // d_i C_ij = d_j C_ji
                Rational dj = d[i] * c[i][j] / Rational(c[j][i]);
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    not_finite("not symmetrizable");
                }
            }
        }
    }
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * c[i][j];
    }
    // Sylvester's criterion via exact Gaussian elimination without pivoting.
    for (std::size_t k = 0; k < n; ++k) {
        if (b[k][k] <= 0) not_finite("symmetrized matrix is not positive definite");
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = b[i][k] / b[k][k];
            for (std::size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
        }
    }
}

std::vector<std::vector<Rational>> invert(const IntMatrix& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = c[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) not_finite("singular Cartan matrix");
        std::swap(a[k], a[pivot]);
        Rational inv = 1 / a[k][k];
        for (auto& x : a[k]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    }
    return out;
}

std::vector<long> negated(std::vector<long> v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

long Root::height() const {
    long h = 0;
    for (long x : root_coords) h += x;
    return h;
}

RootSystem RootSystem::build(const IntMatrix& cartan, std::size_t max_roots) {
    validate_shape(cartan);
    require_finite_type(cartan);

    const std::size_t n = cartan.size();
    RootSystem rs;
    rs.cartan_ = cartan;
    rs.cartan_inverse_ = invert(cartan);

    // Reflection closure in simple-root coordinates, carrying coroots along:
    // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i and
    // s_i(beta^vee) = beta^vee - <beta^vee, alpha_i> alpha_i^vee.
    std::map<std::vector<long>, std::vector<long>> coroot_of;
    std::deque<std::vector<long>> queue;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        coroot_of.emplace(e, e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<long> beta = queue.front();
        queue.pop_front();
        const std::vector<long> beta_co = coroot_of.at(beta);
        for (std::size_t i = 0; i < n; ++i) {
            long pair = 0;     // <alpha_i^vee, beta>
            long co_pair = 0;  // <beta^vee, alpha_i>
            for (std::size_t j = 0; j < n; ++j) {
                pair += cartan[i][j] * beta[j];
                co_pair += beta_co[j] * cartan[j][i];
            }
            if (pair == 0) continue;
            std::vector<long> image = beta;
            image[i] -= pair;
            std::vector<long> image_co = beta_co;
            image_co[i] -= co_pair;
            bool any_neg = false;
            bool any_pos = false;
            for (long x : image) {
                any_neg |= x < 0;
                any_pos |= x > 0;
            }
            if (any_neg && !any_pos) continue;  // s_i(alpha_i) = -alpha_i
            if (any_neg && any_pos) not_finite("reflection produced a mixed-sign vector");
            auto it = coroot_of.find(image);
            if (it != coroot_of.end()) {
                if (it->second != image_co) not_finite("inconsistent coroot bookkeeping");
                continue;
            }
            if (coroot_of.size() >= max_roots) {
                not_finite("more than " + std::to_string(max_roots) + " positive roots");
            }
            coroot_of.emplace(image, image_co);
            queue.push_back(std::move(image));
        }
    }

    for (const auto& [coords, co] : coroot_of) {
        Root r;
        r.root_coords = coords;
        r.coroot_coords = co;
        r.fw_coords.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) r.fw_coords[i] += cartan[i][j] * coords[j];
        }
        rs.roots_.push_back(std::move(r));
    }
    std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
        long ha = a.height();
        long hb = b.height();
        if (ha != hb) return ha < hb;
        return a.root_coords > b.root_coords;
    });

    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        rs.fw_index_.emplace(rs.roots_[k].fw_coords, k);
        rs.coords_index_.emplace(rs.roots_[k].root_coords, k);
    }

    rs.rho_ = Weight(n);
    for (const auto& r : rs.roots_) rs.rho_ += r.weight();
    rs.rho_ *= Rational(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (rs.rho_[i] != 1) {
            throw Error(ErrorKind::InternalInvariant, "rho is not the sum of fundamental weights");
        }
    }
    return rs;
}

std::optional<SignedRoot> RootSystem::find_by_fw(const std::vector<long>& fw) const {
    if (auto it = fw_index_.find(fw); it != fw_index_.end()) return SignedRoot{it->second, +1};
    if (auto it = fw_index_.find(negated(fw)); it != fw_index_.end()) return SignedRoot{it->second, -1};
    return std::nullopt;
}

std::optional<SignedRoot> RootSystem::find_by_root_coords(const std::vector<long>& coords) const {
    if (auto it = coords_index_.find(coords); it != coords_index_.end()) return SignedRoot{it->second, +1};
    if (auto it = coords_index_.find(negated(coords)); it != coords_index_.end()) {
        return SignedRoot{it->second, -1};
    }
    return std::nullopt;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& lam) const {
    if (lam.rank() != rank()) {
        throw Error(ErrorKind::DimensionMismatch, "weight rank does not match root system");
    }
    const std::size_t n = rank();
    std::vector<Rational> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i] += cartan_inverse_[i][j] * lam[j];
    }
    return out;
}

std::optional<std::vector<long>> RootSystem::root_lattice_coords(const Weight& lam) const {
    std::vector<Rational> coords = to_root_coords(lam);
    std::vector<long> out;
    out.reserve(coords.size());
    for (const auto& c : coords) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        out.push_back(c.get_num().get_si());
    }
    return out;
}

Weight RootSystem::from_root_coords(const std::vector<long>& coords) const {
    if (coords.size() != rank()) {
        throw Error(ErrorKind::DimensionMismatch, "root coordinate vector has wrong length");
    }
    std::vector<long> fw(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
        for (std::size_t j = 0; j < rank(); ++j) fw[i] += cartan_[i][j] * coords[j];
    }
    return Weight::from_integers(fw);
}

Rational coroot_pairing(const Root& alpha, const Weight& lam) {
    if (alpha.coroot_coords.size() != lam.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "coroot and weight ranks differ");
    }
    Rational out = 0;
    for (std::size_t j = 0; j < lam.rank(); ++j) out += alpha.coroot_coords[j] * lam[j];
    return out;
}

Rational RootSystem::coroot_pairing(std::size_t root_index, const Weight& lam) const {
    return dseries::coroot_pairing(roots_.at(root_index), lam);
}

WeightClass RootSystem::classify(const Weight& lam) const {
    if (lam.rank() != rank()) {
        throw Error(ErrorKind::DimensionMismatch, "weight rank does not match root system");
    }
    WeightClass out{true, true, true, lam.is_integral()};
    for (const auto& alpha : roots_) {
        Rational p = dseries::coroot_pairing(alpha, lam);
        if (p == 0) out.regular = false;
        if (p >= 0) out.strongly_antidominant = false;
        if (p > 0 && p.get_den() == 1) out.antidominant = false;
    }
    return out;
}

Weight RootSystem::reflect_simple(std::size_t i, const Weight& lam) const {
    if (lam.rank() != rank()) {
        throw Error(ErrorKind::DimensionMismatch, "weight rank does not match root system");
    }
    Weight out = lam;
    const Rational c = lam[i];
    for (std::size_t k = 0; k < rank(); ++k) out[k] -= c * cartan_[k][i];
    return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size() + b.size();
    IntMatrix out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[a.size() + i][a.size() + j] = b[i][j];
    }
    return out;
}

namespace {

IntMatrix chain(std::size_t n) {
    IntMatrix c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

IntMatrix simple_type(char letter, std::size_t n) {
    auto bad = [&] {
        throw Error(ErrorKind::InvalidConfig,
                    std::string("unknown Cartan type ") + letter + std::to_string(n));
    };
    switch (letter) {
        case 'A':
            if (n < 1) bad();
            return chain(n);
        case 'B': {
            if (n < 2) bad();
            IntMatrix c = chain(n);
            c[n - 1][n - 2] = -2;
            return c;
        }
        case 'C': {
            if (n < 2) bad();
            IntMatrix c = chain(n);
            c[n - 2][n - 1] = -2;
            return c;
        }
        case 'D': {
            if (n < 3) bad();
            IntMatrix c = chain(n);
            c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
            return c;
        }
        case 'E': {
            if (n < 6 || n > 8) bad();
            IntMatrix c(n, std::vector<long>(n, 0));
            for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
            auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
            link(0, 2);
            link(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
            return c;
        }
        case 'F': {
            if (n != 4) bad();
            IntMatrix c = chain(4);
            c[2][1] = -2;
            return c;
        }
        case 'G': {
            if (n != 2) bad();
            return {{2, -3}, {-1, 2}};
        }
        default:
            bad();
    }
    return {};
}

}  // namespace

IntMatrix cartan_matrix(const std::string& type) {
    IntMatrix out;
    std::stringstream in(type);
    std::string part;
    while (std::getline(in, part, 'x')) {
        if (part.size() < 2) {
            throw Error(ErrorKind::InvalidConfig, "malformed Cartan type '" + type + "'");
        }
        std::size_t n = 0;
        try {
            n = std::stoul(part.substr(1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidConfig, "malformed Cartan type '" + type + "'");
        }
        out = direct_sum(out, simple_type(part[0], n));
    }
    return out;
}

}  // namespace dseries
