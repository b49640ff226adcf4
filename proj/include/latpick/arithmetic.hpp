#ifndef LATPICK_ARITHMETIC_HPP
#define LATPICK_ARITHMETIC_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "error.hpp"

namespace latpick {

using integer = std::int64_t;
using wide_integer = __int128;

/** Largest coordinate magnitude accepted anywhere in the library. With this
bound every 2x2 determinant of coordinate differences fits in 63 bits. */
inline constexpr integer max_coordinate = 1'000'000'000;

inline integer checked_add(integer a,integer b) {
    integer r;
    if(__builtin_add_overflow(a,b,&r)) throw error(errc::overflow,"integer addition out of range");
    return r;
}

inline integer checked_sub(integer a,integer b) {
    integer r;
    if(__builtin_sub_overflow(a,b,&r)) throw error(errc::overflow,"integer subtraction out of range");
    return r;
}

inline integer checked_mul(integer a,integer b) {
    integer r;
    if(__builtin_mul_overflow(a,b,&r)) throw error(errc::overflow,"integer multiplication out of range");
    return r;
}

/** Narrow a wide intermediate back to 64 bits or fail with Overflow. */
inline integer narrow(wide_integer x) {
    if(x > std::numeric_limits<integer>::max() || x < std::numeric_limits<integer>::min())
        throw error(errc::overflow,"intermediate exceeds 64-bit range");
    return static_cast<integer>(x);
}

inline void check_coordinate(integer x) {
    if(x > max_coordinate || x < -max_coordinate)
        throw error(errc::overflow,
            "coordinate " + std::to_string(x) + " exceeds the bound of 1e9 in magnitude");
}

inline int sign(wide_integer x) noexcept { return (x > 0) - (x < 0); }

/** Magnitude as unsigned so that the most negative value is representable. */
inline std::uint64_t magnitude(integer x) noexcept {
    return x < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

} // namespace latpick

#endif
