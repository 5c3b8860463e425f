#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fusionkit {

/// A finite weight given by its Dynkin labels (lambda_1, ..., lambda_r).
///
/// No sign restriction; dominance is a predicate. Index 0 holds lambda_1.
struct Weight {
    std::vector<int> labels;

    Weight() = default;
    explicit Weight(std::vector<int> l) : labels(std::move(l)) {}
    Weight(std::initializer_list<int> l) : labels(l) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(labels.size()); }
    int operator[](int i) const { return labels[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return labels[static_cast<std::size_t>(i)]; }

    bool is_dominant() const;
    bool is_zero() const;
    int nonzero_count() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int s, Weight a) {
        for (auto& x : a.labels) x *= s;
        return a;
    }
    Weight operator-() const { return -1 * *this; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// Comma-separated labels, e.g. "1,0,2".
    std::string str() const;
    static Weight parse(std::string_view text);
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

/// Hash for integer coordinate vectors (root coordinates, labels).
struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
};

}  // namespace fusionkit
