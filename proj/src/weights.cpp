#include "fusionkit/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "fusionkit/error.hpp"

namespace fusionkit {

bool AffineWeight::is_dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](int x) { return x >= 0; });
}

std::string AffineWeight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i == 1) out += "; ";
        else if (i > 1) out += ',';
        out += std::to_string(labels[i]);
    }
    return out + ")";
}

AffineWeight AffineWeight::parse(std::string_view text, int level) {
    auto fail = [&] { return ParseError("invalid affine weight '" + std::string(text) + "'"); };
    std::string cleaned;
    for (char c : text)
        if (c != ' ') cleaned += c;
    if (cleaned.size() < 3 || cleaned.front() != '(' || cleaned.back() != ')') throw fail();
    std::string body = cleaned.substr(1, cleaned.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw fail();
    AffineWeight out;
    out.level = level;
    int l0 = 0;
    auto head = std::string_view(body).substr(0, semi);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), l0);
    if (head.empty() || ec != std::errc() || ptr != head.data() + head.size()) throw fail();
    out.labels.push_back(l0);
    Weight finite = Weight::parse(std::string_view(body).substr(semi + 1));
    out.labels.insert(out.labels.end(), finite.labels.begin(), finite.labels.end());
    return out;
}

AffineWeight affinize(const RootSystem& rs, const Weight& lambda, int level) {
    int l0 = level - rs.theta_product(lambda);
    if (l0 < 0)
        throw LevelTooSmall("weight " + lambda.str() + " needs level >= " + std::to_string(level - l0) + " in " +
                            rs.algebra().str() + ", got " + std::to_string(level));
    AffineWeight out;
    out.level = level;
    out.labels.reserve(lambda.labels.size() + 1);
    out.labels.push_back(l0);
    out.labels.insert(out.labels.end(), lambda.labels.begin(), lambda.labels.end());
    return out;
}

int nonzero_affine_labels(const AffineWeight& weight) {
    return static_cast<int>(std::count_if(weight.labels.begin(), weight.labels.end(), [](int x) { return x != 0; }));
}

LevelWeights::LevelWeights(const RootSystem& rs, int level)
    : comarks_(rs.comarks().begin(), rs.comarks().end()), level_(level) {}

LevelWeights::LevelWeights(std::vector<int> comarks, int level) : comarks_(std::move(comarks)), level_(level) {}

LevelWeights::iterator::iterator(std::vector<int> comarks, int level) : comarks_(std::move(comarks)) {
    if (level < 0) return;
    current_.level = level;
    current_.labels.assign(comarks_.size(), 0);
    current_.labels[0] = level;
    done_ = false;
}

LevelWeights::iterator& LevelWeights::iterator::operator++() {
    const int k = current_.level;
    auto& l = current_.labels;
    int used = k - l[0];
    for (std::size_t j = l.size() - 1; j >= 1; --j) {
        if (used + comarks_[j] <= k) {
            ++l[j];
            l[0] = k - used - comarks_[j];
            return *this;
        }
        used -= comarks_[j] * l[j];
        l[j] = 0;
    }
    done_ = true;
    return *this;
}

PolytopeSums& PolytopeSums::operator+=(const PolytopeSums& other) {
    count = checked_add(count, other.count);
    nonzero_sum = checked_add(nonzero_sum, other.nonzero_sum);
    return *this;
}

namespace {

void accumulate(std::span<const int> comarks, std::size_t pos, int budget, int nonzero, PolytopeSums& out) {
    if (pos == comarks.size()) {
        // lambda_0 absorbs the remaining budget.
        out.count = checked_add(out.count, 1);
        out.nonzero_sum = checked_add(out.nonzero_sum, nonzero + (budget != 0 ? 1 : 0));
        return;
    }
    const int m = comarks[pos];
    accumulate(comarks, pos + 1, budget, nonzero, out);
    for (int value = 1; value * m <= budget; ++value) accumulate(comarks, pos + 1, budget - value * m, nonzero + 1, out);
}

void check_profile(std::span<const int> comarks) {
    if (comarks.empty()) throw std::invalid_argument("empty comark profile");
    for (int m : comarks)
        if (m <= 0) throw std::invalid_argument("comarks must be positive");
}

}  // namespace

PolytopeSums polytope_sums(std::span<const int> comarks, int level) {
    check_profile(comarks);
    PolytopeSums out;
    if (level < 0) return out;
    accumulate(comarks, 1, level, 0, out);
    return out;
}

PolytopeSums polytope_sums_parallel(std::span<const int> comarks, int level, unsigned threads) {
    check_profile(comarks);
    if (level < 0) return {};
    if (comarks.size() == 1 || threads <= 1) return polytope_sums(comarks, level);
    const int m1 = comarks[1];
    const int slices = level / m1 + 1;
    std::vector<PolytopeSums> partial(static_cast<std::size_t>(slices));
    auto work = [&](unsigned worker) {
        for (int v = static_cast<int>(worker); v < slices; v += static_cast<int>(threads)) {
            PolytopeSums s;
            accumulate(comarks, 2, level - v * m1, v != 0 ? 1 : 0, s);
            partial[static_cast<std::size_t>(v)] = s;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
    PolytopeSums out;
    for (const auto& s : partial) out += s;
    return out;
}

Int128 level_count(const RootSystem& rs, int level) { return polytope_sums(rs.comarks(), level).count; }

unsigned configured_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FUSIONKIT_THREADS")) {
        int requested = std::atoi(env);
        if (requested >= 1) return std::min(hw, static_cast<unsigned>(requested));
    }
    return hw;
}

}  // namespace fusionkit
