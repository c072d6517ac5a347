#include "tilecount/exactnum.hpp"

namespace tilecount {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw parameter_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer to_integer(const Rational& r) {
    if (r.get_den() != 1)
        throw parameter_error("to_integer: value " + r.get_str() + " is not an integer");
    return r.get_num();
}

Count to_count(const Rational& r) {
    Integer v = to_integer(r);
    if (v < 0) throw parameter_error("to_count: value " + v.get_str() + " is negative");
    return v;
}

Integer factorial(long n) {
    if (n < 0) throw parameter_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer double_factorial(long n) {
    if (n < -1) throw parameter_error("double_factorial: argument below -1");
    if (n <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer pochhammer(long a, long i) {
    if (i < 0) throw parameter_error("pochhammer: negative length");
    Integer r = 1;
    for (long k = 0; k < i; ++k) r *= Integer(a + k);
    return r;
}

Integer hyperfactorial(long n) {
    if (n < 0) throw parameter_error("hyperfactorial: negative argument");
    Integer r = 1;
    for (long j = 0; j < n; ++j) r *= factorial(j);
    return r;
}

Integer hyperfactorial2(long n) {
    if (n < 0) throw parameter_error("hyperfactorial2: negative argument");
    Integer r = 1;
    for (long i = 1; 2 * i <= n; ++i) r *= factorial(n - 2 * i);
    return r;
}

Rational binom_ext(long a, long b) {
    if (b < 0) return Rational(0);
    if (b == 0) return Rational(1);
    Integer num = 1;
    for (long k = 0; k < b; ++k) num *= Integer(a - k);
    return make_rational(num, factorial(b));
}

Integer binom_int(long a, long b) { return to_integer(binom_ext(a, b)); }

}  // namespace tilecount
