#include "fusionkit/tadpole.hpp"

#include <numeric>
#include <stdexcept>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

// (J + shift)^{falling m} / divisor!
Polynomial falling_term(int shift, int m, int divisor) {
    return Polynomial::falling(Rational(shift), m) * (Rational(1) / factorial(divisor));
}

Polynomial coefficient_list(std::initializer_list<Rational> lowest_first) { return Polynomial(lowest_first); }

Rational q(long long num, long long den = 1) { return Rational(num, den); }

void require_adjoint_level(int level) {
    if (level < 2) throw LevelTooSmall("the adjoint tadpole needs level >= 2, got " + std::to_string(level));
}

}  // namespace

Rational PiecewisePolynomial::evaluate_exact(int level) const {
    if (level < 0) throw std::invalid_argument("negative level");
    const int residue = level % period;
    const int j = level / period;
    return branches[static_cast<std::size_t>(residue)](Rational(j));
}

Int128 PiecewisePolynomial::evaluate(int level) const {
    Rational value = evaluate_exact(level);
    if (!value.is_integer())
        throw std::logic_error("branch " + std::to_string(level % period) + " gives non-integer " + value.str() +
                               " at level " + std::to_string(level));
    if (value < Rational(0))
        throw std::logic_error("branch " + std::to_string(level % period) + " gives negative " + value.str() +
                               " at level " + std::to_string(level));
    return value.to_integer();
}

std::string to_string(TadpoleMethod method) {
    switch (method) {
        case TadpoleMethod::enumeration: return "enumeration";
        case TadpoleMethod::formula: return "formula";
        case TadpoleMethod::oracle: return "oracle";
    }
    return "?";
}

bool has_closed_form(AlgebraId algebra) {
    switch (algebra.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D: return true;
        case Family::E: return algebra.rank == 6;
        default: return false;
    }
}

int branch_period(const RootSystem& rs) {
    int out = 1;
    for (int m : rs.comarks()) out = std::lcm(out, m);
    return out;
}

PiecewisePolynomial adjoint_tadpole_polynomial(AlgebraId algebra, FormulaVariant variant) {
    if (!has_closed_form(algebra))
        throw NoClosedForm("no closed-form adjoint tadpole for " + algebra.str() + "; use enumeration");
    const int r = algebra.rank;
    const Polynomial J = Polynomial::identity();
    PiecewisePolynomial out;
    switch (algebra.family) {
        case Family::A:
        case Family::C:
            out.period = 1;
            out.branches = {(J - Polynomial::constant(1)) * falling_term(r - 1, r - 1, r - 1)};
            break;
        case Family::B:
            out.period = 2;
            out.branches = {
                4 * falling_term(r - 1, r, r - 1) - Rational(3 * (r - 1)) * falling_term(r - 2, r - 1, r - 1) -
                    falling_term(r - 1, r - 1, r - 1),
                4 * falling_term(r - 1, r, r - 1) - Rational(r - 2) * falling_term(r - 2, r - 1, r - 1),
            };
            break;
        case Family::D:
            out.period = 2;
            out.branches = {
                8 * J * falling_term(r - 2, r - 1, r - 1) + Rational(r - 4) * falling_term(r - 3, r - 2, r - 2) -
                    falling_term(r - 3, r - 3, r - 3),
                8 * falling_term(r - 2, r, r - 1) +
                    Rational(variant == FormulaVariant::printed ? 4 * r : 4 * (r + 2)) *
                        falling_term(r - 2, r - 1, r - 1),
            };
            break;
        case Family::E:
            out.period = 6;
            out.branches = {
                coefficient_list({q(-1), q(-14, 5), q(54, 5), q(117, 2), q(189, 2), q(324, 5), q(81, 5)}),
                coefficient_list({q(0), q(9), q(1191, 20), q(141), q(621, 4), q(81), q(81, 5)}),
                coefficient_list({q(3), q(423, 10), q(1593, 10), q(537, 2), q(459, 2), q(486, 5), q(81, 5)}),
                coefficient_list({q(17), q(1241, 10), q(6741, 20), q(450), q(1269, 4), q(567, 5), q(81, 5)}),
                coefficient_list({q(48), q(1392, 5), q(3099, 5), q(1389, 2), q(837, 2), q(648, 5), q(81, 5)}),
                coefficient_list({q(117), q(2766, 5), q(20871, 20), q(1011), q(2133, 4), q(729, 5), q(81, 5)}),
            };
            break;
        default: break;
    }
    return out;
}

PiecewisePolynomial zero_tadpole_polynomial(AlgebraId algebra) {
    if (!has_closed_form(algebra))
        throw NoClosedForm("no closed-form zero tadpole for " + algebra.str() + "; use enumeration");
    const int r = algebra.rank;
    PiecewisePolynomial out;
    switch (algebra.family) {
        case Family::A:
        case Family::C:
            out.period = 1;
            out.branches = {falling_term(r, r, r)};
            break;
        case Family::B:
            out.period = 2;
            out.branches = {
                falling_term(r, r, r) + 3 * falling_term(r - 1, r, r),
                3 * falling_term(r, r, r) + falling_term(r - 1, r, r),
            };
            break;
        case Family::D:
            out.period = 2;
            out.branches = {
                8 * falling_term(r - 1, r, r) + falling_term(r - 2, r - 2, r - 2),
                8 * falling_term(r - 1, r, r) + 4 * falling_term(r - 1, r - 1, r - 1),
            };
            break;
        case Family::E:
            out.period = 6;
            out.branches = {
                coefficient_list({q(1), q(83, 10), q(551, 20), q(45), q(153, 4), q(81, 5), q(27, 10)}),
                coefficient_list({q(3), q(427, 20), q(2277, 40), q(301, 4), q(423, 8), q(189, 10), q(27, 10)}),
                coefficient_list({q(9), q(242, 5), q(2091, 20), q(116), q(279, 4), q(108, 5), q(27, 10)}),
                coefficient_list({q(20), q(1869, 20), q(6997, 40), q(675, 4), q(711, 8), q(243, 10), q(27, 10)}),
                coefficient_list({q(42), q(337, 2), q(5511, 20), q(235), q(441, 4), q(27), q(27, 10)}),
                coefficient_list({q(78), q(5621, 20), q(16497, 40), q(1265, 4), q(1071, 8), q(297, 10), q(27, 10)}),
            };
            break;
        default: break;
    }
    return out;
}

Int128 adjoint_sum(std::span<const int> comarks, int level) {
    PolytopeSums s = polytope_sums(comarks, level);
    return checked_sub(s.nonzero_sum, s.count);
}

Int128 adjoint_tadpole_enum(const RootSystem& rs, int level) {
    require_adjoint_level(level);
    return adjoint_sum(rs.comarks(), level);
}

Int128 zero_tadpole_enum(const RootSystem& rs, int level) {
    if (level < 0) throw LevelTooSmall("negative level " + std::to_string(level));
    return polytope_sums(rs.comarks(), level).count;
}

Int128 theta_plus_zero(const RootSystem& rs, int level) {
    require_adjoint_level(level);
    return polytope_sums(rs.comarks(), level).nonzero_sum;
}

Int128 adjoint_tadpole_formula(AlgebraId algebra, int level, FormulaVariant variant) {
    PiecewisePolynomial p = adjoint_tadpole_polynomial(algebra, variant);
    require_adjoint_level(level);
    return p.evaluate(level);
}

Int128 zero_tadpole_formula(AlgebraId algebra, int level) {
    PiecewisePolynomial p = zero_tadpole_polynomial(algebra);
    if (level < 0) throw LevelTooSmall("negative level " + std::to_string(level));
    return p.evaluate(level);
}

Int128 adjoint_tadpole_oracle(const Oracle& oracle, int level) {
    require_adjoint_level(level);
    Int128 total = 0;
    for (const AffineWeight& mu : enumerate_level(oracle.root_system(), level))
        total = checked_add(total, oracle.kac_walton_fusion(mu).at(mu.finite()));
    return total;
}

Int128 zero_tadpole_oracle(const Oracle& oracle, int level) {
    if (level < 0) throw LevelTooSmall("negative level " + std::to_string(level));
    const std::vector<WeightMultiplicity> trivial{{Weight::zero(oracle.root_system().rank()), 1}};
    Int128 total = 0;
    for (const AffineWeight& mu : enumerate_level(oracle.root_system(), level))
        total = checked_add(total, oracle.kac_walton_fusion(trivial, mu).at(mu.finite()));
    return total;
}

}  // namespace fusionkit
