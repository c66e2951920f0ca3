#pragma once

#include "dseries/rootdatum.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dseries {

/// An element of W, identified by its matrix on fundamental-weight
/// coordinates. The word is one shortest word found by breadth-first search.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::size_t index, std::size_t rank, std::vector<long> matrix,
                std::vector<int> word, int length)
        : index_(index), rank_(rank), matrix_(std::move(matrix)), word_(std::move(word)),
          length_(length) {}

    /// Position in WeylGroup::elements().
    std::size_t index() const { return index_; }
    std::size_t rank() const { return rank_; }
    /// Row-major rank x rank integer matrix.
    const std::vector<long>& matrix() const { return matrix_; }
    long entry(std::size_t row, std::size_t col) const { return matrix_[row * rank_ + col]; }
    const std::vector<int>& reduced_word() const { return word_; }
    int length() const { return length_; }
    int sign() const { return length_ % 2 == 0 ? 1 : -1; }
    long determinant() const;

    Weight act(const Weight& lam) const;
    std::vector<long> act(const std::vector<long>& fw) const;

    /// "s1*s2*s1", or "e" for the identity. Generators are 1-based.
    std::string word_string() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    std::size_t index_ = 0;
    std::size_t rank_ = 0;
    std::vector<long> matrix_;
    std::vector<int> word_;
    int length_ = 0;
};

class WeylGroup {
public:
    static constexpr std::size_t kDefaultMaxOrder = 100000;

    /// Breadth-first closure over right multiplication by simple reflections.
    /// Throws GroupTooLarge past max_order, and InternalInvariant if a word
    /// length disagrees with the inversion count.
    static WeylGroup generate(const RootSystem& rs, std::size_t max_order = kDefaultMaxOrder);

    std::size_t rank() const { return rank_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& operator[](std::size_t index) const { return elements_[index]; }
    const WeylElement& identity() const { return elements_.front(); }
    const WeylElement& longest() const;
    int max_length() const { return longest().length(); }

    /// Lookup by matrix; throws InternalInvariant if absent.
    const WeylElement& find(const std::vector<long>& matrix) const;
    const WeylElement& compose(const WeylElement& a, const WeylElement& b) const;
    const WeylElement& inverse(const WeylElement& w) const;
    const WeylElement& simple_reflection(std::size_t i) const;
    /// The reflection s_alpha for a positive root.
    const WeylElement& reflection(const RootSystem& rs, std::size_t root_index) const;

    /// W(p): all elements of length p, in generation order.
    std::vector<WeylElement> length_fiber(int p) const;

private:
    std::size_t rank_ = 0;
    std::vector<WeylElement> elements_;
    std::map<std::vector<long>, std::size_t> index_;
    std::vector<std::size_t> simple_;
    std::size_t longest_ = 0;
};

/// w(alpha) for a positive root alpha, as a signed positive-root reference.
SignedRoot apply_to_root(const RootSystem& rs, const WeylElement& w, std::size_t root_index);

/// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylElement& w);

}  // namespace dseries
