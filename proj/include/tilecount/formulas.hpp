#ifndef TILECOUNT_FORMULAS_HPP
#define TILECOUNT_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilecount/qpoly.hpp"
#include "tilecount/shapes.hpp"

namespace tilecount {

// Parameters of the four-parameter free-boundary region family. The product
// formula is proved for y >= 1; y = 0 evaluations are flagged experimental
// by callers that report them.
struct FlashlightParams {
    long x = 0;  // entry bound side
    long y = 0;
    long z = 0;
    long t = 0;

    std::string str() const;
    bool operator==(const FlashlightParams&) const = default;
};

// prod_{i<=a} prod_{j<=b} (m+i+j-1)/(i+j-1)
Count count_rectangle(long a, long b, long m);

// prod_{1<=i<=j<=n} (m+i+j-1)/(i+j-1)
Count count_shifted_staircase(long n, long m);

// Staircase (b, b-1, ..., b-a+1); requires 1 <= a <= b.
Count count_staircase(long a, long b, long m);

// Shifted trapezoid (n, n-2, ..., n-2(k-1)); requires 1 <= k, n-2(k-1) >= 1.
Count count_shifted_trapezoid(long n, long k, long m);

// Shifted double staircase delta_n + delta_k; requires 0 <= k <= n.
Count count_sds(long n, long k, long m);

// The four-parameter product; empty products are 1. y = 0 is evaluated
// verbatim (conjectural regime).
Count count_flashlight_formula(const FlashlightParams& p);

// Arithmetic progression shape (M-d, ..., M-ld) with the content-split
// product; requires M-ld >= 1.
Count count_arith_progression(long M, long d, long l, long m);

// prod_{i<j} (s_j-s_i)/(j-i) * prod_{i<=j} (s_j+s_i)/(j+i) over the dent
// positions 1 <= s_1 < ... < s_k <= x+k.
Count count_quartered_hexagon(long x, const std::vector<long>& s);

// The x = 0 evaluation, computed both as the explicit double product and as
// the hyperfactorial closed form; the two are asserted equal.
Count eval_identity1a(long z, long t);

// The x = 0 product rewritten against the third product of the main formula
// (the published display has an index slip; this is the corrected form).
Count eval_identity1b(long z, long t);

// The x = 1 hyperfactorial closed form, asserted integral.
Count eval_identity2a(long y, long z, long t);

// Direct sum vs t!/(2 z! (t+z+1)!); the flag reports their equality.
struct KummerResult {
    Rational lhs;
    Rational rhs;
    bool equal;
};
KummerResult kummer_closed_sum(long z, long t);

// First component: P_{x,y,z,t} P_{x-2,y+2,z-2,t+2} == P_{x,y+2,z-2,t+1} P_{x-2,y,z,t+1}
// (absent when z == 1, where the z-2 terms are undefined). Second:
// P_{x-2,y+2,z-1,t+1} P_{x,y,z-1,t+1} == P_{x,y,z-1,t} P_{x-2,y+2,z-1,t+2}.
struct PIdentityResult {
    std::optional<bool> first;
    bool second;
};
PIdentityResult p_identity_check(long x, long y, long z, long t);

// z = 1 variants of the product identities.
bool p_identity_z1_first(long x, long y, long t);
bool p_identity_z1_second(long x, long y, long t);

// q-analogs.
QPoly q_count_rectangle(long a, long b, long m);
QPoly q_symmetric_macmahon(long n, long m);      // weight: full size
QPoly q_symmetric_bender_knuth(long n, long m);  // weight: half size

}  // namespace tilecount

#endif
