#pragma once

#include <array>
#include <string>
#include <vector>

#include "fusionkit/adjoint_rules.hpp"
#include "fusionkit/algebra.hpp"
#include "fusionkit/int128.hpp"
#include "fusionkit/tadpole.hpp"

namespace fusionkit {

/// Which copy of a reference table to compare against. `printed` is the
/// verbatim transcription; `corrected` adds the C_r row m = r - 1 that the
/// printed range 1 <= m <= r - 2 leaves out.
enum class Transcription { printed, corrected };

// ---- adjoint tadpoles of B_r ----

inline constexpr int kBTableMinRank = 3;
inline constexpr int kBTableMaxRank = 6;
inline constexpr int kBTableMinLevel = 2;
inline constexpr int kBTableMaxLevel = 13;

/// Reference T_theta[B_{r,k}], indexed [k - 2][r - 3].
const std::array<std::array<long long, 4>, 12>& b_tadpole_reference();

struct BTadpoleCell {
    int rank = 0;
    int level = 0;
    Int128 expected = 0;
    Int128 formula = 0;
    Int128 enumeration = 0;
    bool ok() const { return formula == expected && enumeration == expected; }
};

/// Recomputes every cell by formula and by enumeration.
std::vector<BTadpoleCell> regenerate_b_tadpoles(FormulaVariant variant = FormulaVariant::printed);

// ---- G2 off-diagonal adjoint fusion ----

/// One root beta = nu - mu: minimal affine thresholds on mu-hat for a
/// coefficient 1, and the affine label shift nu-hat - mu-hat.
struct G2OffdiagRow {
    std::array<int, 2> coords{};        ///< beta = c1 alpha1 + c2 alpha2
    std::array<int, 3> thresholds{};    ///< (mu_0, mu_1, mu_2) lower bounds
    std::array<int, 3> offset{};        ///< nu-hat - mu-hat
    std::array<bool, 3> nontrivial{};   ///< threshold not implied by nu-hat dominant
    friend bool operator==(const G2OffdiagRow&, const G2OffdiagRow&) = default;
};

const std::vector<G2OffdiagRow>& g2_offdiag_reference();

/// Exhaustive oracle scan over P_+^k for 2 <= k <= max_level. Rows follow
/// the reference order. Throws std::logic_error if some root's support is
/// not an orthant {mu-hat >= thresholds} on the scanned levels.
std::vector<G2OffdiagRow> regenerate_g2_offdiag(int max_level = 8);

// ---- nontrivial depth-rule conditions ----

/// One reference row in simple-root coordinates with a zero-based index.
struct NontrivialRow {
    std::vector<int> coords;
    int index = 0;
    int threshold_plus = 0;
    int threshold_minus = 0;
    friend bool operator==(const NontrivialRow&, const NontrivialRow&) = default;
    friend auto operator<=>(const NontrivialRow&, const NontrivialRow&) = default;
};

/// Reference rows for one algebra, sorted.
std::vector<NontrivialRow> nontrivial_reference(AlgebraId algebra, Transcription copy = Transcription::corrected);
/// Rows generated from the root system, sorted.
std::vector<NontrivialRow> regenerate_nontrivial(const RootSystem& rs);

struct NontrivialDiff {
    AlgebraId algebra;
    std::vector<NontrivialRow> missing_from_reference;  ///< generated only
    std::vector<NontrivialRow> missing_from_generated;  ///< reference only
    bool ok() const { return missing_from_reference.empty() && missing_from_generated.empty(); }
};

NontrivialDiff compare_nontrivial(const RootSystem& rs, Transcription copy = Transcription::corrected);

/// The algebras covered by the nontrivial-condition check at ranks <= max_rank.
std::vector<AlgebraId> nontrivial_algebras(int max_rank);

// ---- F4 alpha-strings through nontrivial roots ----

struct F4StringRow {
    std::vector<int> coords;           ///< beta
    int index = 0;                     ///< zero-based i
    std::array<int, 4> lower{};        ///< labels of beta - alpha_i
    std::array<int, 4> upper{};        ///< labels of beta + alpha_i
    friend bool operator==(const F4StringRow&, const F4StringRow&) = default;
};

const std::vector<F4StringRow>& f4_strings_reference();
/// Strings for the generated F4 conditions, in reference order.
std::vector<F4StringRow> regenerate_f4_strings();

std::string coords_str(const std::vector<int>& coords);

}  // namespace fusionkit
