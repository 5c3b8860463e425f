#pragma once

#include <string>
#include <vector>

#include "fusionkit/algebra.hpp"
#include "fusionkit/int128.hpp"
#include "fusionkit/oracle.hpp"
#include "fusionkit/polynomial.hpp"
#include "fusionkit/weights.hpp"

namespace fusionkit {

/// A quasi-polynomial in the level: k = period * J + residue selects
/// branches[residue], evaluated at J.
struct PiecewisePolynomial {
    int period = 1;
    std::vector<Polynomial> branches;

    /// Exact branch value at level k (k >= 0), without integrality checks.
    Rational evaluate_exact(int level) const;
    /// Branch value; throws std::logic_error unless it is a nonnegative integer.
    Int128 evaluate(int level) const;
};

enum class TadpoleMethod { enumeration, formula, oracle };

/// The two variants differ only in the D_r odd-level adjoint branch:
/// `printed` uses 4r as the coefficient of the second term, `corrected`
/// uses 4(r + 2). The printed branch undercounts every odd level by
/// 8 (J+r-2)^{r-1} / (r-1)!.
enum class FormulaVariant { printed, corrected };

std::string to_string(TadpoleMethod method);

struct TadpoleReport {
    AlgebraId algebra;
    int level = 0;
    Int128 value = 0;
    TadpoleMethod method = TadpoleMethod::enumeration;
};

/// True for A_r, B_r, C_r, D_r and E6.
bool has_closed_form(AlgebraId algebra);

/// lcm of the finite comarks, the number of polynomial pieces.
int branch_period(const RootSystem& rs);

/// Closed-form adjoint tadpole T_theta. Throws NoClosedForm.
PiecewisePolynomial adjoint_tadpole_polynomial(AlgebraId algebra,
                                               FormulaVariant variant = FormulaVariant::printed);
/// Closed-form zero tadpole T_0 = |P_+^k|. Throws NoClosedForm.
PiecewisePolynomial zero_tadpole_polynomial(AlgebraId algebra);

/// sum over P_+^k of (nonzero affine labels - 1). Throws LevelTooSmall for k < 2.
Int128 adjoint_tadpole_enum(const RootSystem& rs, int level);
/// |P_+^k|; k >= 0.
Int128 zero_tadpole_enum(const RootSystem& rs, int level);
/// T_theta + T_0 = sum over P_+^k of nonzero affine labels. Throws LevelTooSmall for k < 2.
Int128 theta_plus_zero(const RootSystem& rs, int level);

/// Throws NoClosedForm for E7, E8, F4, G2 and LevelTooSmall for k < 2.
Int128 adjoint_tadpole_formula(AlgebraId algebra, int level, FormulaVariant variant = FormulaVariant::printed);
/// Throws NoClosedForm for E7, E8, F4, G2.
Int128 zero_tadpole_formula(AlgebraId algebra, int level);

/// sum over P_+^k of the Kac-Walton diagonal coefficient. k >= 2.
Int128 adjoint_tadpole_oracle(const Oracle& oracle, int level);
/// sum over P_+^k of the Kac-Walton coefficient of the trivial weight.
Int128 zero_tadpole_oracle(const Oracle& oracle, int level);

/// Combinatorial T_theta = sum (nonzero - 1) for any level >= 0 and any
/// comark profile. At k = 0 it equals -1, matching the polynomial branches.
Int128 adjoint_sum(std::span<const int> comarks, int level);

}  // namespace fusionkit
