#include "eyd/qrat.hpp"

#include <numeric>
#include <ostream>
#include <utility>

namespace eyd {

QRat QRat::reduce(QPoly num, QPoly den) {
    if (den.is_zero()) throw ZeroDenominator("rational with zero denominator");
    QRat r;
    if (num.is_zero()) return r;

    QPoly g = poly_gcd(num, den);
    if (g.degree() > 0 || g.lead() != 1) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (c > 1) {
        num = div_exact(num, QPoly(c));
        den = div_exact(den, QPoly(c));
    }
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

mpq_class QRat::limit_at_one() const {
    mpq_class d = den_.eval_at(1);
    if (d == 0) throw PoleAtOne("denominator vanishes at q = 1");
    return num_.eval_at(1) / d;
}

mpq_class QRat::eval_at(const mpq_class& x) const {
    mpq_class d = den_.eval_at(x);
    if (d == 0) throw ZeroDenominator("denominator vanishes at evaluation point");
    return num_.eval_at(x) / d;
}

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    return QRat::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    return QRat::reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    return QRat::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational");
    return QRat::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRat::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.str(); }

namespace detail {

QPoly expand_q_factors(const QIntFactors& f) {
    QPoly p(1L);
    for (const auto& [k, count] : f)
        for (int i = 0; i < count; ++i) p *= q_int(k);
    return p;
}

namespace {

void drop(QIntFactors& f, int k) {
    auto it = f.find(k);
    if (--it->second == 0) f.erase(it);
}

}  // namespace

QRat reduce_qint_quotient(QPoly num, QIntFactors num_f, QIntFactors den_f, bool fast) {
    if (den_f.count(0)) throw ZeroDenominator("q-integer factor [0]_q in denominator");
    if (num_f.count(0) || num.is_zero()) return QRat();
    if (fast) {
        // Cancel [g]_q between numerator factor [a]_q and denominator factor
        // [b]_q whenever g = gcd(a, b) > 1, leaving the exact cofactors as
        // plain polynomial multiplicands.
        QPoly den_extra(1L);
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto na = num_f.rbegin(); na != num_f.rend() && !progress; ++na) {
                for (auto db = den_f.rbegin(); db != den_f.rend() && !progress; ++db) {
                    int g = std::gcd(na->first, db->first);
                    if (g <= 1) continue;
                    int a = na->first, b = db->first;
                    QPoly qg = q_int(g);
                    if (a != g) num *= div_exact(q_int(a), qg);
                    if (b != g) den_extra *= div_exact(q_int(b), qg);
                    drop(num_f, a);
                    drop(den_f, b);
                    progress = true;
                }
            }
        }
        num *= expand_q_factors(num_f);
        // Strip whole denominator q-integers that still divide the numerator.
        for (auto it = den_f.begin(); it != den_f.end();) {
            QPoly qk = q_int(it->first);
            bool advanced = false;
            while (it->second > 0) {
                try {
                    QPoly quot = div_exact(num, qk);
                    num = std::move(quot);
                } catch (const InexactDivision&) {
                    break;
                }
                if (--it->second == 0) {
                    it = den_f.erase(it);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) ++it;
        }
        return QRat::reduce(std::move(num), den_extra * expand_q_factors(den_f));
    }
    num *= expand_q_factors(num_f);
    return QRat::reduce(std::move(num), expand_q_factors(den_f));
}

}  // namespace detail

}  // namespace eyd
