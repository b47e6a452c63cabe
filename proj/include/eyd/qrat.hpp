#pragma once

#include "eyd/qpoly.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace eyd {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(const std::string& what) : std::domain_error(what) {}
};

/*
 * Rational function in q over the integers, kept in the unique reduced form:
 * num/den with integer coefficients, gcd(num, den) = 1 in Z[q] (no common
 * polynomial factor and coprime integer contents), den nonzero with positive
 * leading coefficient. Zero is 0/1. Any rational prefactor is folded into the
 * numerator, so structural equality is value equality.
 */
class QRat {
public:
    QRat() : num_(), den_(1L) {}
    QRat(QPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT: implicit by design
    static QRat reduce(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPoly(1L); }

    // Value at q=1 after reduction; PoleAtOne if the reduced den vanishes there.
    mpq_class limit_at_one() const;
    mpq_class eval_at(const mpq_class& x) const;  // den(x) must be nonzero

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);  // ZeroDenominator if b = 0

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    // "(num) / (den)", or just "num" when the denominator is 1.
    std::string str() const;

private:
    QPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

namespace detail {

/* Multiset of q-integer indices, representing prod_k [k]_q^count. */
using QIntFactors = std::map<int, int>;

QPoly expand_q_factors(const QIntFactors& f);

/*
 * Reduce (num * prod num_f) / (prod den_f). With fast = true, q-integer
 * factors shared between the two products are cancelled first by index gcd
 * ([a]_q and [b]_q share the factor [gcd(a,b)]_q) and remaining denominator
 * q-integers that divide the numerator exactly are stripped; the generic
 * reduction then finishes the job. Results are identical either way; the
 * slow path exists so tests can check that.
 */
QRat reduce_qint_quotient(QPoly num, QIntFactors num_f, QIntFactors den_f, bool fast = true);

}  // namespace detail

}  // namespace eyd
