#pragma once

#include "eyd/qrat.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace eyd {

struct NonUnitConstantTerm : std::domain_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/*
 * Power series in q with integer coefficients, truncated at a fixed order N:
 * exactly the coefficients of q^0 .. q^N are stored. All arithmetic is
 * performed modulo q^{N+1}; operands must share the same order.
 */
class QSeries {
public:
    explicit QSeries(int order);
    static QSeries from_poly(const QPoly& p, int order);

    /* Expansion of a reduced rational function. The denominator needs a unit
     * constant term (+1 or -1) for the expansion to stay over the integers;
     * anything else raises NonUnitConstantTerm. */
    static QSeries from_rat(const QRat& r, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int k) const;
    void add_term(int k, const mpz_class& coeff);  // ignores k > order

    QSeries& operator+=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries shifted(int e) const;            // multiply by q^e
    QSeries& divide_one_minus_q_pow(int h);  // multiply by 1/(1 - q^h), h >= 1

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

    // Polynomial-style rendering with an explicit "+ O(q^{N+1})" tail.
    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

}  // namespace eyd
