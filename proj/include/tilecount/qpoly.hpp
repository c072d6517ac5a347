#ifndef TILECOUNT_QPOLY_HPP
#define TILECOUNT_QPOLY_HPP

#include <string>
#include <vector>

#include "tilecount/exactnum.hpp"

namespace tilecount {

// Univariate polynomial in q over Integer. coeff(e) is the coefficient of
// q^e; the coefficient vector carries no trailing zeros (zero polynomial is
// the empty vector).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Integer& c);
    explicit QPoly(long c) : QPoly(Integer(c)) {}

    static QPoly one() { return QPoly(Integer(1)); }
    static QPoly monomial(const Integer& c, int e);
    static QPoly from_coeffs(std::vector<Integer> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Integer& coeff(int e) const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval_at_one() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    // Exact division; throws parameter_error when the remainder is nonzero.
    QPoly divexact(const QPoly& d) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // "[c0, c1, ...]"
    std::string coeff_list() const;
    // human-readable "1 + 2q + q^3"
    std::string str() const;

private:
    std::vector<Integer> c_;
    void trim();
};

// 1 - q^e
QPoly one_minus_qpow(int e);

// Gaussian binomial; zero polynomial when b < 0 or b > a.
QPoly q_binom(long a, long b);

}  // namespace tilecount

#endif
