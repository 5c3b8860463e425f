#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/algebra.hpp"
#include "fusionkit/int128.hpp"
#include "fusionkit/weight.hpp"

namespace fusionkit {

/// A level-k affine weight (lambda_0; lambda_1, ..., lambda_r).
struct AffineWeight {
    int level = 0;
    /// r + 1 labels, index 0 is lambda_0.
    std::vector<int> labels;

    int rank() const { return static_cast<int>(labels.size()) - 1; }
    /// The horizontal projection (lambda_1, ..., lambda_r).
    Weight finite() const { return Weight(std::vector<int>(labels.begin() + 1, labels.end())); }
    bool is_dominant() const;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;

    /// "(l0; l1,...,lr)".
    std::string str() const;
    /// Accepts "(l0; l1,...,lr)" with optional spaces; level taken from `level`.
    static AffineWeight parse(std::string_view text, int level);
};

/// Attaches lambda_0 = k - (theta, lambda). Throws LevelTooSmall if lambda_0 < 0.
AffineWeight affinize(const RootSystem& rs, const Weight& lambda, int level);

/// Number of nonzero affine labels.
int nonzero_affine_labels(const AffineWeight& weight);

/// Streams the lattice polytope of level-k dominant affine weights,
/// lexicographically on (lambda_1, ..., lambda_r).
class LevelWeights {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = AffineWeight;
        using difference_type = std::ptrdiff_t;
        using pointer = const AffineWeight*;
        using reference = const AffineWeight&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class LevelWeights;
        iterator(std::vector<int> comarks, int level);

        std::vector<int> comarks_;
        AffineWeight current_;
        bool done_ = true;
    };

    LevelWeights(const RootSystem& rs, int level);
    /// Comark profile (m_0, m_1, ..., m_r), m_0 = 1.
    LevelWeights(std::vector<int> comarks, int level);

    iterator begin() const { return iterator(comarks_, level_); }
    iterator end() const { return iterator(); }

private:
    std::vector<int> comarks_;
    int level_;
};

inline LevelWeights enumerate_level(const RootSystem& rs, int level) { return LevelWeights(rs, level); }

/// Aggregate counts over the level-k polytope.
struct PolytopeSums {
    Int128 count = 0;         ///< number of points
    Int128 nonzero_sum = 0;   ///< sum of nonzero affine label counts

    PolytopeSums& operator+=(const PolytopeSums& other);
    friend bool operator==(const PolytopeSums&, const PolytopeSums&) = default;
};

/// Single streaming pass over the polytope for the comark profile
/// (m_0, ..., m_r). Works for any positive comark profile, which lets
/// recurrences refer to rank-0 and other degenerate profiles.
PolytopeSums polytope_sums(std::span<const int> comarks, int level);

/// Same reduction partitioned on lambda_1 across `threads` workers.
/// Totals are bit-identical to the serial pass.
PolytopeSums polytope_sums_parallel(std::span<const int> comarks, int level, unsigned threads);

/// |P_+^k|.
Int128 level_count(const RootSystem& rs, int level);

/// Worker count from FUSIONKIT_THREADS, capped by hardware concurrency; at least 1.
unsigned configured_threads();

}  // namespace fusionkit
