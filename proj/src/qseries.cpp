#include "eyd/qseries.hpp"

#include <ostream>
#include <sstream>

namespace eyd {

QSeries::QSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    c_.assign(order + 1, 0);
}

QSeries QSeries::from_poly(const QPoly& p, int order) {
    QSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.c_[k] = p.coeff(k);
    return s;
}

const mpz_class& QSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient out of range");
    return c_[k];
}

void QSeries::add_term(int k, const mpz_class& coeff) {
    if (k < 0) throw std::out_of_range("series term with negative exponent");
    if (k <= order()) c_[k] += coeff;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    QSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

QSeries QSeries::shifted(int e) const {
    if (e < 0) throw std::invalid_argument("series shift must be nonnegative");
    QSeries out(order());
    for (int k = e; k <= order(); ++k) out.c_[k] = c_[k - e];
    return out;
}

QSeries& QSeries::divide_one_minus_q_pow(int h) {
    if (h < 1) throw std::invalid_argument("geometric factor needs exponent >= 1");
    for (int k = h; k <= order(); ++k) c_[k] += c_[k - h];
    return *this;
}

QSeries QSeries::from_rat(const QRat& r, int order) {
    const QPoly& den = r.den();
    const mpz_class& d0 = den.coeff(0);
    if (d0 != 1 && d0 != -1)
        throw NonUnitConstantTerm("series expansion needs denominator constant term +-1, got " +
                                  d0.get_str());
    QSeries out(order);
    // b_n = (num_n - sum_{k=1..n} den_k b_{n-k}) / den_0 with den_0 = +-1.
    for (int n = 0; n <= order; ++n) {
        mpz_class acc = r.num().coeff(n);
        for (int k = 1; k <= std::min(n, den.degree()); ++k) acc -= den.coeff(k) * out.c_[n - k];
        out.c_[n] = (d0 == 1) ? acc : -acc;
    }
    return out;
}

std::string QSeries::str() const {
    std::ostringstream os;
    os << QPoly::from_coeffs(c_).str() << " + O(q^" << order() + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.str(); }

}  // namespace eyd
