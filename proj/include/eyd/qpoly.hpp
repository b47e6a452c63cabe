#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace eyd {

struct InexactDivision : std::domain_error {
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

struct BothZero : std::domain_error {
    explicit BothZero(const std::string& what) : std::domain_error(what) {}
};

/*
 * Dense univariate polynomial in q with arbitrary-precision integer
 * coefficients. Canonical form: no trailing zero coefficients, so the zero
 * polynomial is the empty coefficient vector and degree() is -1 for it.
 */
class QPoly {
public:
    QPoly() = default;  // zero
    explicit QPoly(long value);
    explicit QPoly(mpz_class value);
    static QPoly from_coeffs(std::vector<mpz_class> coeffs);
    static QPoly monomial(mpz_class coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int k) const;  // 0 outside the stored range
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& lead() const;  // leading coefficient; polynomial must be nonzero

    // gcd of the coefficients (nonnegative); content of the zero polynomial is 0.
    mpz_class content() const;
    QPoly primitive_part() const;

    mpq_class eval_at(const mpq_class& x) const;  // Horner

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // "5 + 4*q + 5*q^2" ascending; unit coefficients print as bare powers.
    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;  // c_[k] is the coefficient of q^k
};

/* Exact quotient a / b in Z[q]; InexactDivision if b does not divide a there. */
QPoly div_exact(const QPoly& a, const QPoly& b);

/* Primitive gcd with positive leading coefficient, computed by a primitive
 * pseudo-remainder sequence over the integers. BothZero if both inputs are 0. */
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/* [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0. Negative k is rejected. */
QPoly q_int(int k);

/* [m]_q! = [1]_q [2]_q ... [m]_q; [0]_q! = 1. */
QPoly q_factorial(int m);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace eyd
