#include "eyd/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace eyd {

namespace {
const mpz_class zero_coeff = 0;
}

QPoly::QPoly(long value) {
    if (value != 0) c_.emplace_back(value);
}

QPoly::QPoly(mpz_class value) {
    if (value != 0) c_.push_back(std::move(value));
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

QPoly QPoly::monomial(mpz_class coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, 0);
        p.c_[degree] = std::move(coeff);
    }
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero_coeff;
    return c_[k];
}

const mpz_class& QPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead(): zero polynomial");
    return c_.back();
}

mpz_class QPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return QPoly();
    mpz_class g = content();
    if (g == 1) return *this;
    QPoly out;
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c / g);
    return out;
}

mpq_class QPoly::eval_at(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += mpq_class(*it);
    }
    return acc;
}

QPoly QPoly::operator-() const {
    QPoly out;
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(-c);
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;  // no trim needed: leading product of nonzero leads is nonzero
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpz_class a = abs(c_[k]);
        bool neg = c_[k] < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (a.is_zero()) return QPoly();
    if (a.degree() < b.degree())
        throw InexactDivision("degree of divisor exceeds degree of dividend");

    // Long division over Q, then insist all quotient coefficients are integers.
    std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1, 0);
    const mpq_class lead_b(b.lead());
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpq_class t = rem[k + b.degree()] / lead_b;
        if (t.get_den() != 1)
            throw InexactDivision("quotient is not integral");
        quot[k] = t.get_num();
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= t * b.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw InexactDivision("nonzero remainder");
    return QPoly::from_coeffs(std::move(quot));
}

namespace {

// r = lc(b)^k a mod b for some k >= 0, avoiding rational arithmetic.
QPoly pseudo_rem(QPoly a, const QPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        QPoly scaled = QPoly(b.lead()) * a;
        scaled -= QPoly::monomial(a.lead(), shift) * b;
        a = std::move(scaled);
    }
    return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("poly_gcd(0, 0)");
    QPoly u = a.primitive_part();
    QPoly v = b.primitive_part();
    if (v.is_zero()) std::swap(u, v);
    if (u.is_zero()) {  // gcd(0, p) is the normalized p
        if (v.lead() < 0) v = -v;
        return v;
    }
    if (u.degree() < v.degree()) std::swap(u, v);
    while (true) {
        QPoly r = pseudo_rem(u, v);
        if (r.is_zero()) break;
        u = std::move(v);
        v = r.primitive_part();
    }
    if (v.lead() < 0) v = -v;
    return v;
}

QPoly q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int: negative index");
    QPoly p;
    if (k > 0) p = QPoly::from_coeffs(std::vector<mpz_class>(k, 1));
    return p;
}

QPoly q_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative index");
    QPoly p(1L);
    for (int k = 2; k <= m; ++k) p *= q_int(k);
    return p;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

}  // namespace eyd
