#ifndef TILECOUNT_EXACTNUM_HPP
#define TILECOUNT_EXACTNUM_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tilecount {

// All arithmetic in this project is exact. Integer/Rational are GMP-backed;
// Count is an Integer that is nonnegative by construction (every producer
// goes through to_count, which checks integrality and sign).
using Integer = mpz_class;
using Rational = mpq_class;
using Count = Integer;

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical rational (lowest terms, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

// Conversion helpers; throw parameter_error when the value is not of the
// claimed kind. Product formulas end with to_count, which is where the
// "denominator reduces to 1" claim is enforced.
Integer to_integer(const Rational& r);
Count to_count(const Rational& r);

Integer factorial(long n);
Integer double_factorial(long n);  // n!!, with (-1)!! = 0!! = 1

// Rising factorial a(a+1)...(a+i-1); empty product = 1.
Integer pochhammer(long a, long i);

// H(n) = 0! 1! ... (n-1)!
Integer hyperfactorial(long n);

// H2(n) = (n-2)! (n-4)! ... down to 0! or 1!. Satisfies
// H2(2x+2) = (2x)!! H2(2x+1) and H2(2x+1) = (2x-1)!! H2(2x).
Integer hyperfactorial2(long n);

// Extended binomial: 0 when b < 0, 1 when b = 0 (any a, including a = -1),
// otherwise the falling factorial a(a-1)...(a-b+1)/b!. Integer-valued.
Rational binom_ext(long a, long b);
Integer binom_int(long a, long b);

}  // namespace tilecount

#endif
