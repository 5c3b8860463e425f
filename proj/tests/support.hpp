#pragma once

#include <map>
#include <string>
#include <vector>

#include <doctest.h>

#include "fusionkit/algebra.hpp"
#include "fusionkit/int128.hpp"
#include "fusionkit/rational.hpp"
#include "fusionkit/weight.hpp"

namespace doctest {
template <>
struct StringMaker<fusionkit::Int128> {
    static String convert(fusionkit::Int128 v) { return fusionkit::to_string(v).c_str(); }
};
template <>
struct StringMaker<fusionkit::Weight> {
    static String convert(const fusionkit::Weight& w) { return ("(" + w.str() + ")").c_str(); }
};
}  // namespace doctest

namespace testing {

inline fusionkit::RootSystemPtr rs(const char* name) {
    return fusionkit::RootSystem::build(fusionkit::AlgebraId::parse(name));
}

/// Weyl dimension formula: prod over positive roots of (lambda+rho, a) / (rho, a).
inline fusionkit::Rational weyl_dimension(const fusionkit::RootSystem& sys, const fusionkit::Weight& lambda) {
    fusionkit::Rational out(1);
    const fusionkit::Weight shifted = lambda + sys.weyl_vector();
    for (const auto& a : sys.positive_roots())
        out *= sys.inner_product(shifted, a.labels) / sys.inner_product(sys.weyl_vector(), a.labels);
    return out;
}

/// Character of the A_r irrep with Dynkin labels `a`, from Gelfand-Tsetlin
/// patterns: Dynkin weight -> multiplicity.
std::map<fusionkit::Weight, long long> gt_character(const fusionkit::Weight& a);

/// Tensor product of two A_r irreps by multiplying GT characters and peeling
/// off maximal weights.
std::map<fusionkit::Weight, long long> gt_tensor(const fusionkit::Weight& a, const fusionkit::Weight& b);

}  // namespace testing
