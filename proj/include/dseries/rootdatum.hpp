#pragma once

#include "dseries/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dseries {

using IntMatrix = std::vector<std::vector<long>>;

/// A positive root carried in three coordinate systems.
///
/// fw_coords_i = sum_j C_ij root_coords_j with C_ij = <alpha_i^vee, alpha_j>,
/// so the fundamental-weight coordinates of a simple root alpha_j are column j
/// of the Cartan matrix.
struct Root {
    std::vector<long> root_coords;
    std::vector<long> fw_coords;
    std::vector<long> coroot_coords;

    long height() const;
    Weight weight() const { return Weight::from_integers(fw_coords); }
};

/// Signed reference to a root: index into positive_roots() and +1/-1.
struct SignedRoot {
    std::size_t index;
    int sign;
};

struct WeightClass {
    bool regular = false;
    bool antidominant = false;
    bool strongly_antidominant = false;
    bool integral = false;
};

class RootSystem {
public:
    static constexpr std::size_t kDefaultMaxRoots = 10000;

    /// Enumerates positive roots by reflection closure of the simple roots.
    /// Throws InvalidCartan for a malformed matrix and NotFiniteType when the
    /// closure does not terminate within max_roots or leaves the root cone.
    static RootSystem build(const IntMatrix& cartan, std::size_t max_roots = kDefaultMaxRoots);

    std::size_t rank() const { return cartan_.size(); }
    const IntMatrix& cartan() const { return cartan_; }
    /// Ordered by height, then by root coordinates descending; the first
    /// rank() entries are the simple roots in index order.
    const std::vector<Root>& positive_roots() const { return roots_; }
    std::size_t num_positive_roots() const { return roots_.size(); }
    const Weight& rho() const { return rho_; }

    Weight root_weight(std::size_t index) const { return roots_[index].weight(); }

    /// Looks a root up by its fundamental-weight coordinates (either sign).
    std::optional<SignedRoot> find_by_fw(const std::vector<long>& fw) const;
    std::optional<SignedRoot> find_by_root_coords(const std::vector<long>& coords) const;

    /// Simple-root coordinates of a weight (exact; rational in general).
    std::vector<Rational> to_root_coords(const Weight& lam) const;
    /// Integer simple-root coordinates when lam lies in the root lattice.
    std::optional<std::vector<long>> root_lattice_coords(const Weight& lam) const;
    Weight from_root_coords(const std::vector<long>& coords) const;

    /// <alpha^vee, lam> for a positive root alpha.
    Rational coroot_pairing(std::size_t root_index, const Weight& lam) const;

    WeightClass classify(const Weight& lam) const;

    /// Simple reflection s_i acting on fundamental-weight coordinates.
    Weight reflect_simple(std::size_t i, const Weight& lam) const;

private:
    IntMatrix cartan_;
    std::vector<std::vector<Rational>> cartan_inverse_;
    std::vector<Root> roots_;
    std::map<std::vector<long>, std::size_t> fw_index_;
    std::map<std::vector<long>, std::size_t> coords_index_;
    Weight rho_;
};

Rational coroot_pairing(const Root& alpha, const Weight& lam);

/// Cartan matrices of the classical and exceptional types under the
/// convention C_ij = <alpha_i^vee, alpha_j>. Names like "A2", "B3", "G2",
/// and products joined by 'x' ("A1xA1", "A1xB2").
IntMatrix cartan_matrix(const std::string& type);

/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

}  // namespace dseries
