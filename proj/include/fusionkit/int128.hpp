#pragma once

#include <string>
#include <string_view>

#include "fusionkit/error.hpp"

namespace fusionkit {

__extension__ typedef __int128 Int128;

/// Overflow-checked 128-bit arithmetic. Wraparound is never silent.
inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("128-bit addition overflow");
    return out;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow("128-bit subtraction overflow");
    return out;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow("128-bit multiplication overflow");
    return out;
}

inline Int128 abs128(Int128 a) {
    if (a < 0) return checked_sub(0, a);
    return a;
}

inline Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(Int128 value);

/// Parses an optionally signed decimal integer; throws ParseError.
Int128 parse_int128(std::string_view text);

}  // namespace fusionkit
