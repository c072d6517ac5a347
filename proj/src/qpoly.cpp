#include "tilecount/qpoly.hpp"

#include <sstream>

namespace tilecount {

namespace {
const Integer kZero = 0;
}

QPoly::QPoly(const Integer& c) {
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Integer& c, int e) {
    QPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(e) + 1, Integer(0));
        p.c_.back() = c;
    }
    return p;
}

QPoly QPoly::from_coeffs(std::vector<Integer> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& QPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(e)];
}

Integer QPoly::eval_at_one() const {
    Integer s = 0;
    for (const Integer& c : c_) s += c;
    return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly::from_coeffs(std::move(r));
}

QPoly QPoly::divexact(const QPoly& d) const {
    if (d.is_zero()) throw parameter_error("QPoly::divexact: division by zero");
    if (is_zero()) return QPoly();
    if (degree() < d.degree())
        throw parameter_error("QPoly::divexact: remainder is nonzero");
    std::vector<Integer> rem = c_;
    std::vector<Integer> quot(c_.size() - d.c_.size() + 1, Integer(0));
    const Integer& lead = d.c_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Integer& top = rem[k + d.degree()];
        if (top == 0) continue;
        if (top % lead != 0)
            throw parameter_error("QPoly::divexact: remainder is nonzero");
        Integer q = top / lead;
        quot[static_cast<size_t>(k)] = q;
        for (size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= q * d.c_[i];
    }
    for (const Integer& c : rem)
        if (c != 0) throw parameter_error("QPoly::divexact: remainder is nonzero");
    return QPoly::from_coeffs(std::move(quot));
}

std::string QPoly::coeff_list() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    if (c_.empty()) os << "0";
    os << "]";
    return os.str();
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < c_.size(); ++e) {
        const Integer& c = c_[e];
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

QPoly one_minus_qpow(int e) {
    std::vector<Integer> c(static_cast<size_t>(e) + 1, Integer(0));
    c[0] = 1;
    c[static_cast<size_t>(e)] -= 1;  // e = 0 gives the zero polynomial
    return QPoly::from_coeffs(std::move(c));
}

QPoly q_binom(long a, long b) {
    if (b < 0 || b > a) return QPoly();
    QPoly num = QPoly::one(), den = QPoly::one();
    for (long i = 1; i <= b; ++i) {
        num *= one_minus_qpow(static_cast<int>(a + 1 - i));
        den *= one_minus_qpow(static_cast<int>(i));
    }
    return num.divexact(den);
}

}  // namespace tilecount
