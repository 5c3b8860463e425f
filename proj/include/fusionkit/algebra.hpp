#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fusionkit/rational.hpp"
#include "fusionkit/weight.hpp"

namespace fusionkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie algebra: family tag plus rank.
///
/// Valid ranks: A_r (r >= 1), B_r (r >= 3), C_r (r >= 2), D_r (r >= 4),
/// E_6, E_7, E_8, F_4, G_2.
struct AlgebraId {
    Family family = Family::A;
    int rank = 1;

    /// Throws InvalidRank when the rank is outside the family bounds.
    static AlgebraId make(Family family, int rank);
    /// Parses names such as "A3", "b4", "E6" (case-insensitive).
    static AlgebraId parse(std::string_view name);

    bool is_valid() const;
    bool is_simply_laced() const;
    std::string str() const;

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
    friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Cartan data under the convention A_ij = (alpha_i, alpha_j^vee).
///
/// Row i of the Cartan matrix is the Dynkin-label vector of alpha_i; the
/// labels of beta = sum_j c_j alpha_j are beta_i = sum_j c_j A_ji.
/// Normalisation: (theta, theta) = 2, so symmetrizer[i] = (alpha_i, alpha_i) / 2.
struct CartanData {
    Matrix<int> cartan;
    std::vector<Rational> symmetrizer;
    /// (Lambda^i, Lambda^j).
    Matrix<Rational> quadratic_form;
};

/// A root beta = sum_j coords[j] alpha_j together with its Dynkin labels.
struct Root {
    std::vector<int> coords;
    Weight labels;

    bool is_positive() const;
    int height() const;  ///< sum of coords
    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

/// Immutable root-system data for one simple Lie algebra.
///
/// Indices i are zero-based: simple root i is alpha_{i+1}. Comarks are
/// stored for the affine index set, comarks()[0] = m_0^vee = 1.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(AlgebraId algebra);

    AlgebraId algebra() const { return algebra_; }
    int rank() const { return algebra_.rank; }
    const CartanData& cartan_data() const { return cartan_; }

    /// Positive roots, lexicographic on coords.
    std::span<const Root> positive_roots() const { return {roots_.data(), positive_count_}; }
    /// All roots: positive roots followed by their negatives in the same order.
    std::span<const Root> roots() const { return roots_; }
    const Root& highest_root() const { return roots_[highest_index_]; }
    const Root& root(std::size_t index) const { return roots_[index]; }
    std::size_t root_count() const { return roots_.size(); }

    /// Affine comarks (m_0, m_1, ..., m_r) with m_0 = 1.
    std::span<const int> comarks() const { return comarks_; }
    int dual_coxeter() const { return dual_coxeter_; }
    const Weight& weyl_vector() const { return rho_; }
    /// Dynkin labels of the simple root alpha_{i+1}.
    const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }

    Rational inner_product(const Weight& x, const Weight& y) const;
    /// (theta, lambda) = sum_i m_i lambda_i.
    int theta_product(const Weight& lambda) const;

    /// Index into roots() of the root with these Dynkin labels, or -1.
    int find_root(const Weight& labels) const;
    int find_root_coords(const std::vector<int>& coords) const;
    bool is_root(const Weight& labels) const { return find_root(labels) >= 0; }
    Weight labels_of(const std::vector<int>& coords) const;

    /// d_i[beta]: largest u with beta + u alpha_i in the root set. Throws NotARoot.
    int alpha_string_depth(const Root& beta, int i) const;
    /// h_i[beta]: largest v with beta - v alpha_i in the root set. Throws NotARoot.
    int alpha_string_height(const Root& beta, int i) const;
    int depth(std::size_t root_index, int i) const { return depths_[root_index][static_cast<std::size_t>(i)]; }
    int height(std::size_t root_index, int i) const { return heights_[root_index][static_cast<std::size_t>(i)]; }
    /// delta[beta] = sum_j d_j[beta] Lambda^j.
    Weight depth_weight(const Root& beta) const;

    /// r_i lambda = lambda - lambda_i alpha_i.
    Weight reflect(int i, const Weight& lambda) const;
    /// r_i . lambda = lambda - (lambda_i + 1) alpha_i.
    Weight shifted_reflect(int i, const Weight& lambda) const;

private:
    RootSystem() = default;
    std::size_t index_or_throw(const Root& beta) const;

    AlgebraId algebra_;
    CartanData cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<Root> roots_;
    std::size_t positive_count_ = 0;
    std::size_t highest_index_ = 0;
    std::vector<int> comarks_;
    int dual_coxeter_ = 0;
    Weight rho_;
    std::unordered_map<Weight, int, WeightHash> by_labels_;
    std::unordered_map<std::vector<int>, int, IntVectorHash> by_coords_;
    std::vector<std::vector<int>> depths_;
    std::vector<std::vector<int>> heights_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Cartan data computed from the Dynkin diagram and root lengths.
CartanData make_cartan_data(AlgebraId algebra);

/// All roots obtained by closing the simple roots under simple reflections.
std::vector<std::vector<int>> closure_roots(const Matrix<int>& cartan);

/// Positive roots of B_r, C_r, D_r from the explicit L/M/N families.
std::vector<std::vector<int>> classical_family_roots(AlgebraId algebra);

}  // namespace fusionkit
