#include "support.hpp"

#include <functional>
#include <numeric>

namespace testing {

using fusionkit::Weight;

std::map<Weight, long long> gt_character(const Weight& a) {
    const int r = a.rank();
    const int n = r + 1;
    std::vector<int> top(static_cast<std::size_t>(n), 0);
    for (int j = n - 2; j >= 0; --j) top[static_cast<std::size_t>(j)] = top[static_cast<std::size_t>(j + 1)] + a[j];

    std::map<Weight, long long> out;
    std::vector<int> row_sums(static_cast<std::size_t>(n + 1), 0);
    row_sums[static_cast<std::size_t>(n)] = std::accumulate(top.begin(), top.end(), 0);

    std::function<void(const std::vector<int>&)> descend = [&](const std::vector<int>& row) {
        const std::size_t len = row.size();
        if (len == 1) {
            row_sums[1] = row[0];
            // gl weight w_j = s_j - s_{j-1}; Dynkin label i = w_i - w_{i+1}.
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j)
                w[static_cast<std::size_t>(j - 1)] = row_sums[static_cast<std::size_t>(j)] - row_sums[static_cast<std::size_t>(j - 1)];
            Weight labels = Weight::zero(r);
            for (int i = 0; i < r; ++i) labels[i] = w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i + 1)];
            ++out[labels];
            return;
        }
        std::vector<int> next(len - 1);
        std::function<void(std::size_t)> fill = [&](std::size_t j) {
            if (j == next.size()) {
                row_sums[len - 1] = std::accumulate(next.begin(), next.end(), 0);
                descend(next);
                return;
            }
            for (int v = row[j + 1]; v <= row[j]; ++v) {
                next[j] = v;
                fill(j + 1);
            }
        };
        fill(0);
    };
    descend(top);
    return out;
}

std::map<Weight, long long> gt_tensor(const Weight& a, const Weight& b) {
    const auto ca = gt_character(a);
    const auto cb = gt_character(b);
    std::map<Weight, long long> product;
    for (const auto& [x, m] : ca)
        for (const auto& [y, k] : cb) product[x + y] += m * k;

    std::map<Weight, long long> out;
    for (;;) {
        std::erase_if(product, [](const auto& e) { return e.second == 0; });
        if (product.empty()) break;
        // Highest remaining weight: largest (rho^vee, .) among dominant weights.
        const Weight* best = nullptr;
        long long best_height = 0;
        for (const auto& [w, m] : product) {
            if (!w.is_dominant()) continue;
            // For A_r, 2 rho^vee pairs with labels as sum_i i (r+1-i) w_i.
            long long h = 0;
            for (int i = 0; i < w.rank(); ++i) h += static_cast<long long>(i + 1) * (w.rank() - i) * w[i];
            if (!best || h > best_height) {
                best = &w;
                best_height = h;
            }
        }
        REQUIRE(best != nullptr);
        const Weight top = *best;
        const long long mult = product[top];
        REQUIRE(mult > 0);
        out[top] += mult;
        for (const auto& [w, m] : gt_character(top)) product[w] -= mult * m;
    }
    return out;
}

}  // namespace testing
