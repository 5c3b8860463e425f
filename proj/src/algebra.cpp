#include "fusionkit/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

struct DynkinDiagram {
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> half_lengths;  // (alpha_i, alpha_i) / 2
};

DynkinDiagram diagram_of(AlgebraId algebra) {
    const int r = algebra.rank;
    DynkinDiagram d;
    d.half_lengths.assign(static_cast<std::size_t>(r), Rational(1));
    auto chain = [&](int n) {
        for (int i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (algebra.family) {
        case Family::A:
            chain(r);
            break;
        case Family::B:
            chain(r);
            d.half_lengths[static_cast<std::size_t>(r - 1)] = Rational(1, 2);
            break;
        case Family::C:
            chain(r);
            for (int i = 0; i + 1 < r; ++i) d.half_lengths[static_cast<std::size_t>(i)] = Rational(1, 2);
            break;
        case Family::D:
            chain(r - 1);
            d.edges.emplace_back(r - 3, r - 1);
            break;
        case Family::E:
            // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
            d.edges.emplace_back(0, 2);
            for (int i = 2; i + 1 < r; ++i) d.edges.emplace_back(i, i + 1);
            d.edges.emplace_back(1, 3);
            break;
        case Family::F:
            chain(4);
            d.half_lengths[2] = Rational(1, 2);
            d.half_lengths[3] = Rational(1, 2);
            break;
        case Family::G:
            // alpha_1 long, so that theta = 2 alpha_1 + 3 alpha_2.
            chain(2);
            d.half_lengths[1] = Rational(1, 3);
            break;
    }
    return d;
}

Matrix<Rational> invert(Matrix<Rational> m) {
    const std::size_t n = m.size();
    Matrix<Rational> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) throw std::logic_error("singular Gram matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == Rational(0)) continue;
            Rational f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<int> labels_from(const Matrix<int>& cartan, const std::vector<int>& coords) {
    const std::size_t r = cartan.size();
    std::vector<int> labels(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        if (coords[j] == 0) continue;
        for (std::size_t i = 0; i < r; ++i) labels[i] += coords[j] * cartan[j][i];
    }
    return labels;
}

// Largest v with beta + step * v * alpha_i a root; 0 is skipped, so the scan
// runs past it. No root string exceeds four elements.
int string_extent(const std::unordered_map<std::vector<int>, int, IntVectorHash>& roots, std::vector<int> coords,
                  std::size_t i, int step) {
    int best = 0;
    for (int v = 1; v <= 4; ++v) {
        coords[i] += step;
        if (roots.count(coords)) best = v;
    }
    return best;
}

}  // namespace

AlgebraId AlgebraId::make(Family family, int rank) {
    AlgebraId id{family, rank};
    if (!id.is_valid()) throw InvalidRank("no simple Lie algebra " + id.str());
    return id;
}

bool AlgebraId::is_valid() const {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 3;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

bool AlgebraId::is_simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
}

std::string AlgebraId::str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

AlgebraId AlgebraId::parse(std::string_view name) {
    if (name.size() < 2) throw ParseError("invalid algebra name '" + std::string(name) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (f < 'A' || f > 'G') throw ParseError("unknown algebra family in '" + std::string(name) + "'");
    int rank = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("invalid algebra rank in '" + std::string(name) + "'");
    return make(static_cast<Family>(f), rank);
}

bool Root::is_positive() const {
    return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

CartanData make_cartan_data(AlgebraId algebra) {
    if (!algebra.is_valid()) throw InvalidRank("no simple Lie algebra " + algebra.str());
    const auto r = static_cast<std::size_t>(algebra.rank);
    DynkinDiagram diagram = diagram_of(algebra);
    const auto& d = diagram.half_lengths;

    Matrix<Rational> gram(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) gram[i][i] = 2 * d[i];
    for (auto [a, b] : diagram.edges) {
        auto i = static_cast<std::size_t>(a), j = static_cast<std::size_t>(b);
        // Any bond touching a long root has (alpha_i, alpha_j) = -1; a bond
        // between two short roots of half-length d has -d.
        Rational value = -std::max(d[i], d[j]);
        gram[i][j] = value;
        gram[j][i] = value;
    }

    CartanData out;
    out.symmetrizer = d;
    out.cartan.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.cartan[i][j] = static_cast<int>((gram[i][j] / d[j]).to_integer());

    Matrix<Rational> inv = invert(gram);
    out.quadratic_form.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.quadratic_form[i][j] = d[i] * inv[i][j] * d[j];
    return out;
}

std::vector<std::vector<int>> closure_roots(const Matrix<int>& cartan) {
    const std::size_t r = cartan.size();
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> beta = std::move(queue.front());
        queue.pop_front();
        std::vector<int> labels = labels_from(cartan, beta);
        for (std::size_t i = 0; i < r; ++i) {
            if (labels[i] == 0) continue;
            std::vector<int> image = beta;
            image[i] -= labels[i];
            if (seen.insert(image).second) queue.push_back(std::move(image));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> classical_family_roots(AlgebraId algebra) {
    const int r = algebra.rank;
    std::vector<std::vector<int>> out;
    // Coordinates use 1-based positions l = 1..r, as in the family definitions.
    auto make = [&](auto coefficient) {
        std::vector<int> c(static_cast<std::size_t>(r), 0);
        for (int l = 1; l <= r; ++l) c[static_cast<std::size_t>(l - 1)] = coefficient(l);
        out.push_back(std::move(c));
    };
    switch (algebra.family) {
        case Family::B:
            for (int m = 1; m <= r; ++m) make([&](int l) { return l >= m ? 1 : 0; });
            for (int m = 1; m <= r; ++m)
                for (int n = m + 1; n <= r; ++n) {
                    make([&](int l) { return (l >= m && l < n) ? 1 : 0; });
                    make([&](int l) { return (l >= m && l < n) ? 1 : (l >= n ? 2 : 0); });
                }
            break;
        case Family::C:
            for (int m = 1; m <= r; ++m) make([&](int l) { return l >= m ? 1 : 0; });
            for (int m = 1; m <= r; ++m)
                for (int n = m + 1; n <= r; ++n) make([&](int l) { return (l >= m && l < n) ? 1 : 0; });
            // eps_m + eps_n (m < n < r) and the long roots 2 eps_m (m = n < r).
            for (int m = 1; m < r; ++m)
                for (int n = m; n < r; ++n)
                    make([&](int l) {
                        if (l >= m && l < n) return 1;
                        if (l >= n && l < r) return 2;
                        return l == r ? 1 : 0;
                    });
            break;
        case Family::D:
            for (int m = 1; m < r; ++m) make([&](int l) { return ((l >= m && l <= r - 2) || l == r) ? 1 : 0; });
            for (int m = 1; m <= r; ++m)
                for (int n = m + 1; n <= r; ++n) make([&](int l) { return (l >= m && l < n) ? 1 : 0; });
            for (int m = 1; m < r - 1; ++m)
                for (int n = m + 1; n <= r - 1; ++n)
                    make([&](int l) {
                        if (l >= m && l < n) return 1;
                        if (l >= n && l < r - 1) return 2;
                        return l >= r - 1 ? 1 : 0;
                    });
            break;
        default:
            throw std::invalid_argument("explicit root families exist only for B, C and D");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const RootSystem> RootSystem::build(AlgebraId algebra) {
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->algebra_ = algebra;
    rs->cartan_ = make_cartan_data(algebra);
    const int r = algebra.rank;
    const auto ur = static_cast<std::size_t>(r);

    for (std::size_t i = 0; i < ur; ++i) rs->simple_roots_.emplace_back(rs->cartan_.cartan[i]);

    std::vector<std::vector<int>> positive;
    if (algebra.family == Family::B || algebra.family == Family::C || algebra.family == Family::D) {
        positive = classical_family_roots(algebra);
    } else {
        for (auto& c : closure_roots(rs->cartan_.cartan))
            if (std::any_of(c.begin(), c.end(), [](int x) { return x > 0; })) positive.push_back(std::move(c));
    }
    std::sort(positive.begin(), positive.end());

    rs->positive_count_ = positive.size();
    for (const auto& c : positive) rs->roots_.push_back({c, Weight(labels_from(rs->cartan_.cartan, c))});
    for (const auto& c : positive) {
        std::vector<int> neg = c;
        for (auto& x : neg) x = -x;
        rs->roots_.push_back({neg, Weight(labels_from(rs->cartan_.cartan, neg))});
    }
    for (std::size_t idx = 0; idx < rs->roots_.size(); ++idx) {
        rs->by_coords_.emplace(rs->roots_[idx].coords, static_cast<int>(idx));
        rs->by_labels_.emplace(rs->roots_[idx].labels, static_cast<int>(idx));
    }

    rs->depths_.assign(rs->roots_.size(), std::vector<int>(ur, 0));
    rs->heights_.assign(rs->roots_.size(), std::vector<int>(ur, 0));
    for (std::size_t idx = 0; idx < rs->roots_.size(); ++idx)
        for (std::size_t i = 0; i < ur; ++i) {
            rs->depths_[idx][i] = string_extent(rs->by_coords_, rs->roots_[idx].coords, i, +1);
            rs->heights_[idx][i] = string_extent(rs->by_coords_, rs->roots_[idx].coords, i, -1);
        }

    // theta: the positive root of maximal height.
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < rs->positive_count_; ++idx)
        if (rs->roots_[idx].height() > rs->roots_[best].height()) best = idx;
    rs->highest_index_ = best;

    const Root& theta = rs->roots_[best];
    rs->comarks_.assign(ur + 1, 1);
    for (std::size_t i = 0; i < ur; ++i)
        rs->comarks_[i + 1] = static_cast<int>((Rational(theta.coords[i]) * rs->cartan_.symmetrizer[i]).to_integer());
    rs->dual_coxeter_ = std::accumulate(rs->comarks_.begin(), rs->comarks_.end(), 0);
    rs->rho_ = Weight(std::vector<int>(ur, 1));
    return rs;
}

Rational RootSystem::inner_product(const Weight& x, const Weight& y) const {
    if (x.rank() != rank() || y.rank() != rank())
        throw AlgebraMismatch("weights do not belong to " + algebra_.str());
    Rational out = 0;
    const auto& g = cartan_.quadratic_form;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank(); ++j)
            if (y[j] != 0) row += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rational(y[j]);
        out += Rational(x[i]) * row;
    }
    return out;
}

int RootSystem::theta_product(const Weight& lambda) const {
    if (lambda.rank() != rank()) throw AlgebraMismatch("weight does not belong to " + algebra_.str());
    int out = 0;
    for (int i = 0; i < rank(); ++i) out += comarks_[static_cast<std::size_t>(i + 1)] * lambda[i];
    return out;
}

int RootSystem::find_root(const Weight& labels) const {
    auto it = by_labels_.find(labels);
    return it == by_labels_.end() ? -1 : it->second;
}

int RootSystem::find_root_coords(const std::vector<int>& coords) const {
    auto it = by_coords_.find(coords);
    return it == by_coords_.end() ? -1 : it->second;
}

Weight RootSystem::labels_of(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != rank()) throw AlgebraMismatch("coordinate vector of wrong rank");
    return Weight(labels_from(cartan_.cartan, coords));
}

std::size_t RootSystem::index_or_throw(const Root& beta) const {
    int idx = find_root_coords(beta.coords);
    if (idx < 0) throw NotARoot("not a root of " + algebra_.str());
    return static_cast<std::size_t>(idx);
}

int RootSystem::alpha_string_depth(const Root& beta, int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple root index out of range");
    return depth(index_or_throw(beta), i);
}

int RootSystem::alpha_string_height(const Root& beta, int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple root index out of range");
    return height(index_or_throw(beta), i);
}

Weight RootSystem::depth_weight(const Root& beta) const {
    std::size_t idx = index_or_throw(beta);
    return Weight(depths_[idx]);
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
    return lambda - lambda[i] * simple_roots_[static_cast<std::size_t>(i)];
}

Weight RootSystem::shifted_reflect(int i, const Weight& lambda) const {
    return lambda - (lambda[i] + 1) * simple_roots_[static_cast<std::size_t>(i)];
}

}  // namespace fusionkit
