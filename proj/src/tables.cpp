#include "fusionkit/tables.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "fusionkit/oracle.hpp"

namespace fusionkit {

const std::array<std::array<long long, 4>, 12>& b_tadpole_reference() {
    static const std::array<std::array<long long, 4>, 12> table{{
        {3, 3, 3, 3},
        {11, 14, 17, 20},
        {24, 34, 45, 57},
        {45, 72, 105, 144},
        {74, 130, 205, 301},
        {114, 220, 375, 588},
        {165, 345, 630, 1050},
        {230, 520, 1015, 1792},
        {309, 749, 1554, 2898},
        {405, 1050, 2310, 4536},
        {518, 1428, 3318, 6846},
        {651, 1904, 4662, 10080},
    }};
    return table;
}

std::vector<BTadpoleCell> regenerate_b_tadpoles(FormulaVariant variant) {
    std::vector<BTadpoleCell> out;
    for (int r = kBTableMinRank; r <= kBTableMaxRank; ++r) {
        const AlgebraId id = AlgebraId::make(Family::B, r);
        const auto rs = RootSystem::build(id);
        for (int k = kBTableMinLevel; k <= kBTableMaxLevel; ++k) {
            BTadpoleCell cell;
            cell.rank = r;
            cell.level = k;
            cell.expected = b_tadpole_reference()[static_cast<std::size_t>(k - kBTableMinLevel)]
                                                 [static_cast<std::size_t>(r - kBTableMinRank)];
            cell.formula = adjoint_tadpole_formula(id, k, variant);
            cell.enumeration = adjoint_tadpole_enum(*rs, k);
            out.push_back(cell);
        }
    }
    return out;
}

const std::vector<G2OffdiagRow>& g2_offdiag_reference() {
    static const std::vector<G2OffdiagRow> rows{
        {{1, 0}, {1, 0, 3}, {-1, 2, -3}, {false, false, false}},
        {{1, 1}, {1, 0, 2}, {-1, 1, -1}, {false, false, true}},
        {{2, 3}, {2, 0, 0}, {-2, 1, 0}, {false, false, false}},
        {{1, 2}, {1, 0, 1}, {-1, 0, 1}, {false, false, true}},
        {{1, 3}, {1, 1, 0}, {-1, -1, 3}, {false, false, false}},
        {{0, 1}, {0, 1, 0}, {0, -1, 2}, {false, false, false}},
        {{-1, 0}, {0, 2, 0}, {1, -2, 3}, {false, false, false}},
        {{-1, -1}, {0, 1, 1}, {1, -1, 1}, {false, false, true}},
        {{-2, -3}, {0, 1, 0}, {2, -1, 0}, {false, false, false}},
        {{-1, -2}, {0, 0, 2}, {1, 0, -1}, {false, false, true}},
        {{-1, -3}, {0, 0, 3}, {1, 1, -3}, {false, false, false}},
        {{0, -1}, {0, 0, 2}, {0, 1, -2}, {false, false, false}},
    };
    return rows;
}

std::vector<G2OffdiagRow> regenerate_g2_offdiag(int max_level) {
    const auto rs = RootSystem::build(AlgebraId::make(Family::G, 2));
    const Oracle oracle(rs);
    const auto& reference = g2_offdiag_reference();

    struct Scan {
        std::array<int, 3> lower{std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
                                 std::numeric_limits<int>::max()};
        std::vector<std::pair<std::array<int, 3>, bool>> samples;
    };
    std::vector<Scan> scans(reference.size());
    std::vector<Weight> betas;
    for (const auto& row : reference) {
        int idx = rs->find_root_coords({row.coords[0], row.coords[1]});
        if (idx < 0) throw std::logic_error("reference G2 row is not a root");
        betas.push_back(rs->root(static_cast<std::size_t>(idx)).labels);
    }

    for (int k = 2; k <= max_level; ++k) {
        for (const AffineWeight& mu : enumerate_level(*rs, k)) {
            const FusionDecomposition product = oracle.kac_walton_fusion(mu);
            const std::array<int, 3> m{mu.labels[0], mu.labels[1], mu.labels[2]};
            for (std::size_t b = 0; b < betas.size(); ++b) {
                Weight nu = mu.finite() + betas[b];
                bool hit = nu.is_dominant() && rs->theta_product(nu) <= k && product.at(nu) > 0;
                scans[b].samples.push_back({m, hit});
                if (hit)
                    for (int j = 0; j < 3; ++j) scans[b].lower[j] = std::min(scans[b].lower[j], m[j]);
            }
        }
    }

    std::vector<G2OffdiagRow> out;
    for (std::size_t b = 0; b < betas.size(); ++b) {
        const Scan& s = scans[b];
        if (s.lower[0] == std::numeric_limits<int>::max())
            throw std::logic_error("G2 root " + coords_str({reference[b].coords[0], reference[b].coords[1]}) +
                                   " never occurs on the scanned levels");
        for (const auto& [m, hit] : s.samples) {
            bool inside = m[0] >= s.lower[0] && m[1] >= s.lower[1] && m[2] >= s.lower[2];
            if (inside != hit)
                throw std::logic_error("G2 root " + coords_str({reference[b].coords[0], reference[b].coords[1]}) +
                                       " has a support that is not an orthant");
        }
        G2OffdiagRow row;
        row.coords = reference[b].coords;
        row.thresholds = s.lower;
        row.offset = {-rs->theta_product(betas[b]), betas[b][0], betas[b][1]};
        for (int j = 0; j < 3; ++j) row.nontrivial[j] = row.thresholds[j] > std::max(0, -row.offset[j]);
        out.push_back(row);
    }
    return out;
}

namespace {

NontrivialRow row(std::vector<int> coords, int index, int plus, int minus) {
    return {std::move(coords), index, plus, minus};
}

}  // namespace

std::vector<NontrivialRow> nontrivial_reference(AlgebraId algebra, Transcription copy) {
    std::vector<NontrivialRow> out;
    const int r = algebra.rank;
    switch (algebra.family) {
        case Family::B:
            for (int m = 1; m < r; ++m) {
                std::vector<int> c(static_cast<std::size_t>(r), 0);
                for (int j = m - 1; j < r; ++j) c[static_cast<std::size_t>(j)] = 1;
                out.push_back(row(c, r - 1, 1, 1));
            }
            break;
        case Family::C: {
            const int last = copy == Transcription::printed ? r - 2 : r - 1;
            for (int m = 1; m <= last; ++m) {
                std::vector<int> c(static_cast<std::size_t>(r), 0);
                c[static_cast<std::size_t>(m - 1)] = 1;
                for (int j = m; j < r - 1; ++j) c[static_cast<std::size_t>(j)] = 2;
                c[static_cast<std::size_t>(r - 1)] = 1;
                out.push_back(row(c, m - 1, 1, 1));
            }
            break;
        }
        case Family::F:
            out = {row({0, 1, 1, 0}, 2, 1, 1), row({1, 1, 1, 0}, 2, 1, 1), row({1, 2, 3, 2}, 2, 1, 1),
                   row({0, 1, 2, 1}, 3, 1, 1), row({1, 1, 2, 1}, 3, 1, 1), row({1, 2, 2, 1}, 3, 1, 1)};
            break;
        case Family::G:
            out = {row({1, 1}, 1, 2, 1), row({1, 2}, 1, 1, 2)};
            break;
        default: break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NontrivialRow> regenerate_nontrivial(const RootSystem& rs) {
    std::vector<NontrivialRow> out;
    for (const auto& c : generate_nontrivial_conditions(rs))
        out.push_back({c.root.coords, c.index, c.threshold_plus, c.threshold_minus});
    std::sort(out.begin(), out.end());
    return out;
}

NontrivialDiff compare_nontrivial(const RootSystem& rs, Transcription copy) {
    const auto reference = nontrivial_reference(rs.algebra(), copy);
    const auto generated = regenerate_nontrivial(rs);
    NontrivialDiff diff{rs.algebra(), {}, {}};
    std::set_difference(generated.begin(), generated.end(), reference.begin(), reference.end(),
                        std::back_inserter(diff.missing_from_reference));
    std::set_difference(reference.begin(), reference.end(), generated.begin(), generated.end(),
                        std::back_inserter(diff.missing_from_generated));
    return diff;
}

std::vector<AlgebraId> nontrivial_algebras(int max_rank) {
    std::vector<AlgebraId> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back(AlgebraId::make(Family::A, r));
    for (int r = 3; r <= max_rank; ++r) out.push_back(AlgebraId::make(Family::B, r));
    for (int r = 2; r <= max_rank; ++r) out.push_back(AlgebraId::make(Family::C, r));
    for (int r = 4; r <= max_rank; ++r) out.push_back(AlgebraId::make(Family::D, r));
    for (int r = 6; r <= 8; ++r) out.push_back(AlgebraId::make(Family::E, r));
    out.push_back(AlgebraId::make(Family::F, 4));
    out.push_back(AlgebraId::make(Family::G, 2));
    return out;
}

const std::vector<F4StringRow>& f4_strings_reference() {
    static const std::vector<F4StringRow> rows{
        {{0, 1, 1, 0}, 2, {-1, 2, -2, 0}, {-1, 0, 2, -2}},
        {{1, 1, 1, 0}, 2, {1, 1, -2, 0}, {1, -1, 2, -2}},
        {{1, 2, 3, 2}, 2, {0, 1, -2, 2}, {0, -1, 2, 0}},
        {{0, 1, 2, 1}, 3, {-1, 0, 2, -2}, {-1, 0, 0, 2}},
        {{1, 1, 2, 1}, 3, {1, -1, 2, -2}, {1, -1, 0, 2}},
        {{1, 2, 2, 1}, 3, {0, 1, 0, -2}, {0, 1, -2, 2}},
    };
    return rows;
}

std::vector<F4StringRow> regenerate_f4_strings() {
    const auto rs = RootSystem::build(AlgebraId::make(Family::F, 4));
    const auto& reference = f4_strings_reference();
    auto rank_of = [&](const std::vector<int>& coords) {
        auto it = std::find_if(reference.begin(), reference.end(), [&](const F4StringRow& r) { return r.coords == coords; });
        return static_cast<std::size_t>(it - reference.begin());
    };
    std::vector<F4StringRow> out;
    for (const auto& c : generate_nontrivial_conditions(*rs)) {
        F4StringRow s;
        s.coords = c.root.coords;
        s.index = c.index;
        Weight lower = c.root.labels - rs->simple_root(c.index);
        Weight upper = c.root.labels + rs->simple_root(c.index);
        if (!rs->is_root(lower) || !rs->is_root(upper))
            throw std::logic_error("F4 string through " + coords_str(c.root.coords) + " is shorter than three roots");
        std::copy(lower.labels.begin(), lower.labels.end(), s.lower.begin());
        std::copy(upper.labels.begin(), upper.labels.end(), s.upper.begin());
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](const F4StringRow& a, const F4StringRow& b) { return rank_of(a.coords) < rank_of(b.coords); });
    return out;
}

std::string coords_str(const std::vector<int>& coords) {
    std::string out = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + "]";
}

}  // namespace fusionkit
