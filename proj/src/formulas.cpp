#include "tilecount/formulas.hpp"

#include <sstream>

namespace tilecount {

namespace {

Rational frac(long num, long den) { return make_rational(Integer(num), Integer(den)); }

}  // namespace

std::string FlashlightParams::str() const {
    std::ostringstream os;
    os << "flashlight:" << x << "," << y << "," << z << "," << t;
    return os.str();
}

Count count_rectangle(long a, long b, long m) {
    if (a < 0 || b < 0 || m < 0)
        throw parameter_error("count_rectangle: a,b,m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) r *= frac(m + i + j - 1, i + j - 1);
    return to_count(r);
}

Count count_shifted_staircase(long n, long m) {
    if (n < 0 || m < 0)
        throw parameter_error("count_shifted_staircase: n,m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) r *= frac(m + i + j - 1, i + j - 1);
    return to_count(r);
}

Count count_staircase(long a, long b, long m) {
    if (a < 1 || a > b) throw parameter_error("count_staircase: 1 <= a <= b required");
    if (m < 0) throw parameter_error("count_staircase: m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= b - a + 1; ++j) r *= frac(m + i + j - 1, i + j - 1);
        for (long j = b - a + 2; j <= b - a + i; ++j) r *= frac(2 * m + i + j - 1, i + j - 1);
    }
    return to_count(r);
}

Count count_shifted_trapezoid(long n, long k, long m) {
    if (k < 1 || n - 2 * (k - 1) < 1)
        throw parameter_error("count_shifted_trapezoid: need 1 <= k and n-2(k-1) >= 1");
    if (m < 0) throw parameter_error("count_shifted_trapezoid: m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= n - k + 1; ++j) r *= frac(m + i + j - 1, i + j - 1);
    return to_count(r);
}

Count count_sds(long n, long k, long m) {
    if (k < 0 || k > n) throw parameter_error("count_sds: 0 <= k <= n required");
    if (m < 0) throw parameter_error("count_sds: m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) r *= frac(m + i + j - 1, i + j - 1);
    for (long i = 1; i <= k; ++i)
        for (long j = i; j <= k; ++j) r *= frac(m + i + j, i + j);
    return to_count(r);
}

Count count_flashlight_formula(const FlashlightParams& p) {
    if (p.x < 0 || p.y < 0 || p.z < 0 || p.t < 0)
        throw parameter_error("count_flashlight_formula: nonnegative parameters required");
    Rational r(1);
    for (long i = 1; i <= p.y + p.z; ++i)
        for (long j = i; j <= p.y + p.z; ++j) r *= frac(p.x + i + j - 1, i + j - 1);
    for (long i = 1; i <= p.z; ++i)
        for (long j = i; j <= p.z; ++j) r *= frac(p.x + i + j, i + j);
    for (long i = 1; i <= p.t; ++i)
        for (long j = 1; j <= p.z; ++j)
            r *= frac(p.x + p.z + 2 * i + j, p.x + 2 * i + j - 1);
    return to_count(r);
}

Count count_arith_progression(long M, long d, long l, long m) {
    if (l < 1 || d < 0 || M - l * d < 1)
        throw parameter_error("count_arith_progression: need l >= 1, d >= 0, M-l*d >= 1");
    if (m < 0) throw parameter_error("count_arith_progression: m >= 0 required");
    Rational r(1);
    for (long i = 1; i <= l; ++i) {
        long len = M - i * d;
        for (long j = 1; j <= len; ++j) {
            long c = l + content(static_cast<int>(i), static_cast<int>(j));
            if (c <= M - i * d)
                r *= frac(m + c, c);
            else
                r *= frac((d + 1) * m + c, c);
        }
    }
    return to_count(r);
}

Count count_quartered_hexagon(long x, const std::vector<long>& s) {
    long k = static_cast<long>(s.size());
    if (x < 0) throw parameter_error("count_quartered_hexagon: x >= 0 required");
    for (long i = 0; i < k; ++i) {
        if (s[i] < 1 || s[i] > x + k)
            throw parameter_error("count_quartered_hexagon: positions must lie in [1, x+k]");
        if (i > 0 && s[i - 1] >= s[i])
            throw parameter_error("count_quartered_hexagon: positions must be increasing");
    }
    Rational r(1);
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j) r *= frac(s[j] - s[i], j - i);
    for (long i = 0; i < k; ++i)
        for (long j = i; j < k; ++j) r *= frac(s[j] + s[i], j + i + 2);
    return to_count(r);
}

Count eval_identity1a(long z, long t) {
    if (z < 0 || t < 0) throw parameter_error("eval_identity1a: z,t >= 0 required");
    Rational prod(1);
    for (long i = 1; i <= z; ++i) {
        prod *= frac(t + i, i);
        for (long j = 2; j <= i; ++j) prod *= frac(2 * t + i + j - 1, i + j - 1);
    }
    Count direct = to_count(prod);
    Rational closed = make_rational(
        hyperfactorial2(2 * z + 2 * t + 2) * hyperfactorial(z + 1) * hyperfactorial(2 * t + 1),
        hyperfactorial2(2 * t + 2) * hyperfactorial2(2 * z + 2) * hyperfactorial(2 * t + z + 1));
    if (direct != to_count(closed))
        throw parameter_error("eval_identity1a: product and closed form disagree at z=" +
                              std::to_string(z) + ", t=" + std::to_string(t));
    return direct;
}

Count eval_identity1b(long z, long t) {
    if (z < 0 || t < 0) throw parameter_error("eval_identity1b: z,t >= 0 required");
    Rational prod(1);
    for (long i = 1; i <= t; ++i)
        for (long j = 1; j <= z; ++j) prod *= frac(z + 2 * i + j, 2 * i + j - 1);
    Count direct = to_count(prod);
    Rational closed = make_rational(
        hyperfactorial2(2 * t + 2 * z + 2) * hyperfactorial2(2 * t + 1) * hyperfactorial(z + 1),
        hyperfactorial2(2 * z + 2) * hyperfactorial(z + 2 * t + 1));
    if (direct != to_count(closed))
        throw parameter_error("eval_identity1b: product and closed form disagree at z=" +
                              std::to_string(z) + ", t=" + std::to_string(t));
    return direct;
}

Count eval_identity2a(long y, long z, long t) {
    if (y < 1) throw parameter_error("eval_identity2a: y >= 1 required");
    if (z < 0 || t < 0) throw parameter_error("eval_identity2a: z,t >= 0 required");
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(y - 1));
    Rational r = make_rational(pow2 * factorial(t), factorial(t + z + 1));
    r *= make_rational(
        hyperfactorial2(2 * t + 2 * z + 4) * hyperfactorial(2 * t + 1) * hyperfactorial(z + 1),
        hyperfactorial2(2 * t + 2) * hyperfactorial(2 * t + z + 2) * hyperfactorial2(2 * z + 2));
    Count v = to_count(r);
    if (v != count_flashlight_formula({1, y, z, t}))
        throw parameter_error("eval_identity2a: closed form disagrees with the main product");
    return v;
}

KummerResult kummer_closed_sum(long z, long t) {
    if (z < 0 || t < 0) throw parameter_error("kummer_closed_sum: z,t >= 0 required");
    Rational lhs(0);
    for (long i = 1; i <= z + 1; ++i)
        lhs += make_rational(factorial(2 * t + i),
                             factorial(i - 1) * factorial(z - i + 1) *
                                 factorial(2 * t + i + z + 1));
    Rational rhs = make_rational(factorial(t), 2 * factorial(z) * factorial(t + z + 1));
    return {lhs, rhs, lhs == rhs};
}

namespace {

Rational flashlight_rat(long x, long y, long z, long t) {
    return Rational(count_flashlight_formula({x, y, z, t}));
}

}  // namespace

PIdentityResult p_identity_check(long x, long y, long z, long t) {
    if (x < 2 || z < 1)
        throw parameter_error("p_identity_check: x >= 2 and z >= 1 required");
    if (y < 0 || t < 0) throw parameter_error("p_identity_check: y,t >= 0 required");
    PIdentityResult res;
    if (z >= 2) {
        res.first = flashlight_rat(x, y, z, t) * flashlight_rat(x - 2, y + 2, z - 2, t + 2) ==
                    flashlight_rat(x, y + 2, z - 2, t + 1) * flashlight_rat(x - 2, y, z, t + 1);
    }
    res.second = flashlight_rat(x - 2, y + 2, z - 1, t + 1) * flashlight_rat(x, y, z - 1, t + 1) ==
                 flashlight_rat(x, y, z - 1, t) * flashlight_rat(x - 2, y + 2, z - 1, t + 2);
    return res;
}

bool p_identity_z1_first(long x, long y, long t) {
    return flashlight_rat(x, y, 1, t) * flashlight_rat(x - 2, y + 1, 0, t + 2) ==
           flashlight_rat(x, y + 1, 0, t + 1) * flashlight_rat(x - 2, y, 1, t + 1);
}

bool p_identity_z1_second(long x, long y, long t) {
    return flashlight_rat(x - 2, y + 2, 0, t + 1) * flashlight_rat(x, y, 0, t + 1) ==
           flashlight_rat(x, y, 0, t) * flashlight_rat(x - 2, y + 2, 0, t + 2);
}

QPoly q_count_rectangle(long a, long b, long m) {
    if (a < 0 || b < 0 || m < 0)
        throw parameter_error("q_count_rectangle: a,b,m >= 0 required");
    QPoly num = QPoly::one(), den = QPoly::one();
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) {
            num *= one_minus_qpow(static_cast<int>(m + i + j - 1));
            den *= one_minus_qpow(static_cast<int>(i + j - 1));
        }
    return num.divexact(den);
}

QPoly q_symmetric_macmahon(long n, long m) {
    if (n < 0 || m < 0) throw parameter_error("q_symmetric_macmahon: n,m >= 0 required");
    QPoly num = QPoly::one(), den = QPoly::one();
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            num *= one_minus_qpow(static_cast<int>(2 * (i + j + m - 1)));
            den *= one_minus_qpow(static_cast<int>(2 * (i + j - 1)));
        }
    for (long i = 1; i <= n; ++i) {
        num *= one_minus_qpow(static_cast<int>(2 * i + m - 1));
        den *= one_minus_qpow(static_cast<int>(2 * i - 1));
    }
    return num.divexact(den);
}

QPoly q_symmetric_bender_knuth(long n, long m) {
    if (n < 0 || m < 0)
        throw parameter_error("q_symmetric_bender_knuth: n,m >= 0 required");
    QPoly num = QPoly::one(), den = QPoly::one();
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) {
            num *= one_minus_qpow(static_cast<int>(i + j + m - 1));
            den *= one_minus_qpow(static_cast<int>(i + j - 1));
        }
    return num.divexact(den);
}

}  // namespace tilecount
