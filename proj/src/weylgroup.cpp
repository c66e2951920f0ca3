#include "dseries/weylgroup.hpp"

#include "dseries/error.hpp"

#include <deque>

namespace dseries {

namespace {

std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b, std::size_t n) {
    std::vector<long> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            long aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    }
    return out;
}

// s_alpha(lam) = lam - <alpha^vee, lam> alpha, as a matrix on fw coordinates.
std::vector<long> reflection_matrix(const Root& alpha) {
    const std::size_t n = alpha.fw_coords.size();
    std::vector<long> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] -= alpha.fw_coords[i] * alpha.coroot_coords[j];
    }
    return m;
}

}  // namespace

long WeylElement::determinant() const {
    // Fraction-free Bareiss elimination; entries stay integral.
    const std::size_t n = rank_;
    if (n == 0) return 1;
    std::vector<long> a = matrix_;
    long sign = 1;
    long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap * n + k] == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

Weight WeylElement::act(const Weight& lam) const {
    if (lam.rank() != rank_) {
        throw Error(ErrorKind::DimensionMismatch, "Weyl element and weight ranks differ");
    }
    Weight out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = 0; j < rank_; ++j) {
            long m = entry(i, j);
            if (m != 0) out[i] += m * lam[j];
        }
    }
    return out;
}

std::vector<long> WeylElement::act(const std::vector<long>& fw) const {
    if (fw.size() != rank_) {
        throw Error(ErrorKind::DimensionMismatch, "Weyl element and vector ranks differ");
    }
    std::vector<long> out(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = 0; j < rank_; ++j) out[i] += entry(i, j) * fw[j];
    }
    return out;
}

std::string WeylElement::word_string() const {
    if (word_.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (k) out += '*';
        out += 's' + std::to_string(word_[k] + 1);
    }
    return out;
}

SignedRoot apply_to_root(const RootSystem& rs, const WeylElement& w, std::size_t root_index) {
    auto image = rs.find_by_fw(w.act(rs.positive_roots().at(root_index).fw_coords));
    if (!image) {
        throw Error(ErrorKind::InternalInvariant, "Weyl element does not permute the roots");
    }
    return *image;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
    int count = 0;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        if (apply_to_root(rs, w, k).sign < 0) ++count;
    }
    return count;
}

WeylGroup WeylGroup::generate(const RootSystem& rs, std::size_t max_order) {
    const std::size_t n = rs.rank();
    WeylGroup group;
    group.rank_ = n;

    std::vector<std::vector<long>> generators;
    for (std::size_t i = 0; i < n; ++i) generators.push_back(reflection_matrix(rs.positive_roots()[i]));

    std::vector<long> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;

    std::vector<std::vector<long>> matrices{id};
    std::vector<std::vector<int>> words{{}};
    group.index_.emplace(id, 0);
    for (std::size_t head = 0; head < matrices.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long> next = multiply(matrices[head], generators[i], n);
            if (group.index_.count(next)) continue;
            if (matrices.size() >= max_order) {
                throw Error(ErrorKind::GroupTooLarge,
                            "Weyl group order exceeds " + std::to_string(max_order));
            }
            group.index_.emplace(next, matrices.size());
            std::vector<int> word = words[head];
            word.push_back(static_cast<int>(i));
            matrices.push_back(std::move(next));
            words.push_back(std::move(word));
        }
    }

    group.elements_.reserve(matrices.size());
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const int word_length = static_cast<int>(words[k].size());
        group.elements_.emplace_back(k, n, std::move(matrices[k]), std::move(words[k]), word_length);
        if (inversion_count(rs, group.elements_.back()) != word_length) {
            throw Error(ErrorKind::InternalInvariant, "BFS word length disagrees with inversion count");
        }
        if (word_length > group.elements_[group.longest_].length()) group.longest_ = k;
    }
    for (std::size_t i = 0; i < n; ++i) group.simple_.push_back(group.index_.at(generators[i]));
    return group;
}

const WeylElement& WeylGroup::longest() const {
    return elements_[longest_];
}

const WeylElement& WeylGroup::find(const std::vector<long>& matrix) const {
    auto it = index_.find(matrix);
    if (it == index_.end()) {
        throw Error(ErrorKind::InternalInvariant, "matrix is not an element of this Weyl group");
    }
    return elements_[it->second];
}

const WeylElement& WeylGroup::compose(const WeylElement& a, const WeylElement& b) const {
    return find(multiply(a.matrix(), b.matrix(), rank_));
}

const WeylElement& WeylGroup::inverse(const WeylElement& w) const {
    // w^{-1} is reached by the reversed word.
    const WeylElement* out = &identity();
    for (int g : w.reduced_word()) out = &compose(simple_reflection(static_cast<std::size_t>(g)), *out);
    return *out;
}

const WeylElement& WeylGroup::simple_reflection(std::size_t i) const {
    return elements_[simple_.at(i)];
}

const WeylElement& WeylGroup::reflection(const RootSystem& rs, std::size_t root_index) const {
    return find(reflection_matrix(rs.positive_roots().at(root_index)));
}

std::vector<WeylElement> WeylGroup::length_fiber(int p) const {
    std::vector<WeylElement> out;
    for (const auto& w : elements_) {
        if (w.length() == p) out.push_back(w);
    }
    return out;
}

}  // namespace dseries
