#include "eyd/qpoly.hpp"
#include "eyd/qrat.hpp"
#include "eyd/qseries.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace eyd;

namespace {

QPoly one_minus_q_pow(int k) {
    return QPoly(1L) - QPoly::monomial(1, k);
}

QPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-max_abs, max_abs);
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return QPoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("polynomial canonical form and accessors") {
    CHECK(QPoly().is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK(QPoly::from_coeffs({1, 2, 0, 0}).degree() == 1);
    CHECK(QPoly::monomial(3, 4).coeff(4) == 3);
    CHECK(QPoly::monomial(3, 4).coeff(2) == 0);
    CHECK(QPoly::monomial(0, 4).is_zero());
    CHECK(QPoly(7L).degree() == 0);
    CHECK(QPoly::from_coeffs({2, 1}).lead() == 1);
}

TEST_CASE("polynomial arithmetic") {
    const QPoly one_plus_q = QPoly::from_coeffs({1, 1});
    const QPoly one_minus_q = QPoly::from_coeffs({1, -1});
    CHECK(one_plus_q * one_minus_q == QPoly::from_coeffs({1, 0, -1}));
    CHECK(one_plus_q + one_minus_q == QPoly(2L));
    CHECK(one_plus_q - one_plus_q == QPoly());
    CHECK(-one_plus_q == QPoly::from_coeffs({-1, -1}));
    CHECK(QPoly() * one_plus_q == QPoly());
    CHECK(one_plus_q.eval_at(2) == 3);
    CHECK(QPoly::from_coeffs({1, -3, 2}).eval_at(mpq_class(1, 2)) == 0);
}

TEST_CASE("content and primitive part") {
    CHECK(QPoly::from_coeffs({4, 6}).content() == 2);
    CHECK(QPoly::from_coeffs({4, 6}).primitive_part() == QPoly::from_coeffs({2, 3}));
    CHECK(QPoly::from_coeffs({-4, -6}).content() == 2);
    CHECK(QPoly().content() == 0);
}

TEST_CASE("exact division") {
    CHECK(div_exact(one_minus_q_pow(3), QPoly::from_coeffs({1, -1})) ==
          QPoly::from_coeffs({1, 1, 1}));
    CHECK(div_exact(QPoly(), QPoly::from_coeffs({1, 1})) == QPoly());
    CHECK_THROWS_AS(div_exact(QPoly::from_coeffs({1, 1}), QPoly::from_coeffs({1, -1})),
                    InexactDivision);
    // 2 + 2q over 2 is fine; 1 + q over 2 is not integral.
    CHECK(div_exact(QPoly::from_coeffs({2, 2}), QPoly(2L)) == QPoly::from_coeffs({1, 1}));
    CHECK_THROWS_AS(div_exact(QPoly::from_coeffs({1, 1}), QPoly(2L)), InexactDivision);
    CHECK_THROWS(div_exact(QPoly(1L), QPoly()));
}

TEST_CASE("polynomial gcd") {
    const QPoly g = poly_gcd(one_minus_q_pow(4), one_minus_q_pow(6));
    CHECK(g == QPoly::from_coeffs({-1, 0, 1}));  // q^2 - 1, positive leading
    CHECK(div_exact(one_minus_q_pow(4), g) * g == one_minus_q_pow(4));
    CHECK(div_exact(one_minus_q_pow(6), g) * g == one_minus_q_pow(6));
    CHECK(poly_gcd(QPoly::from_coeffs({1, 1}), QPoly::from_coeffs({1, 1, 1})) == QPoly(1L));
    CHECK(poly_gcd(QPoly(), QPoly::from_coeffs({2, 4})) == QPoly::from_coeffs({1, 2}));
    // The gcd is primitive: integer content is handled by QRat::reduce, not here.
    CHECK(poly_gcd(QPoly::from_coeffs({6}), QPoly::from_coeffs({4})) == QPoly(1L));
    CHECK_THROWS_AS(poly_gcd(QPoly(), QPoly()), BothZero);
}

TEST_CASE("gcd divides both inputs on random samples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        QPoly a = random_poly(rng, 6, 5), b = random_poly(rng, 6, 5);
        if (a.is_zero() && b.is_zero()) continue;
        const QPoly g = poly_gcd(a, b);
        CHECK(g.lead() > 0);
        // The primitive gcd divides the primitive part of each input exactly.
        if (!a.is_zero()) CHECK(div_exact(a.primitive_part(), g) * g == a.primitive_part());
        if (!b.is_zero()) CHECK(div_exact(b.primitive_part(), g) * g == b.primitive_part());
    }
}

TEST_CASE("q-integers and q-factorials") {
    CHECK(q_int(0) == QPoly());
    CHECK(q_int(1) == QPoly(1L));
    CHECK(q_int(4) == QPoly::from_coeffs({1, 1, 1, 1}));
    CHECK_THROWS(q_int(-1));
    CHECK(q_factorial(0) == QPoly(1L));
    CHECK(q_factorial(3) == QPoly::from_coeffs({1, 2, 2, 1}));
    for (int m = 0; m <= 12; ++m) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        CHECK(q_factorial(m).eval_at(1) == fact);
    }
}

TEST_CASE("rational reduction to canonical form") {
    const QRat r = QRat::reduce(one_minus_q_pow(6), one_minus_q_pow(2));
    CHECK(r.is_polynomial());
    CHECK(r.num() == QPoly::from_coeffs({1, 0, 1, 0, 1}));  // 1 + q^2 + q^4
    CHECK(r.den() == QPoly(1L));

    const QRat s = QRat::reduce(QPoly::from_coeffs({2, 2}), QPoly::from_coeffs({4}));
    CHECK(s.num() == QPoly::from_coeffs({1, 1}));
    CHECK(s.den() == QPoly(2L));

    // Denominator sign is normalized into the numerator.
    const QRat t = QRat::reduce(QPoly(1L), QPoly::from_coeffs({0, -1}));
    CHECK(t.den() == QPoly::from_coeffs({0, 1}));
    CHECK(t.num() == QPoly(-1L));

    CHECK_THROWS_AS(QRat::reduce(QPoly(1L), QPoly()), ZeroDenominator);
    CHECK(QRat::reduce(QPoly(), QPoly::from_coeffs({3, 1})) == QRat());
}

TEST_CASE("reduction is invariant under common factors") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        QPoly a = random_poly(rng, 5, 4), b = random_poly(rng, 5, 4), k = random_poly(rng, 3, 3);
        if (b.is_zero() || k.is_zero()) continue;
        CHECK(QRat::reduce(a, b) == QRat::reduce(a * k, b * k));
    }
}

TEST_CASE("rational arithmetic and evaluation") {
    const QRat inv_1mq = QRat::reduce(QPoly(1L), QPoly::from_coeffs({1, -1}));
    const QRat q = QRat(QPoly::monomial(1, 1));
    CHECK(inv_1mq * QRat(QPoly::from_coeffs({1, -1})) == QRat(QPoly(1L)));
    CHECK(inv_1mq - inv_1mq == QRat());
    CHECK(q / q == QRat(QPoly(1L)));
    CHECK_THROWS_AS(q / QRat(), ZeroDenominator);
    CHECK((inv_1mq + inv_1mq).eval_at(mpq_class(1, 2)) == 4);
    CHECK(QRat(q_int(5)).limit_at_one() == 5);
    // (1 - q^6)/(1 - q^2) -> polynomial, limit 3.
    CHECK(QRat::reduce(one_minus_q_pow(6), one_minus_q_pow(2)).limit_at_one() == 3);
    CHECK_THROWS_AS(QRat::reduce(QPoly(1L), QPoly::from_coeffs({1, -1})).limit_at_one(),
                    PoleAtOne);
}

TEST_CASE("q-integer quotient reduction fast path agrees with the generic path") {
    using detail::QIntFactors;
    using detail::reduce_qint_quotient;

    // [4][6] / [2][3] = (1+q^2)(1+q+q^2+q^3+q^4+q^5)/(1+q+q^2) -- mixed cancellation.
    QIntFactors num_f{{4, 1}, {6, 1}};
    QIntFactors den_f{{2, 1}, {3, 1}};
    const QRat fast = reduce_qint_quotient(QPoly(1L), num_f, den_f, true);
    const QRat slow = reduce_qint_quotient(QPoly(1L), num_f, den_f, false);
    CHECK(fast == slow);
    CHECK(fast.limit_at_one() == 4);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> idx(1, 9), cnt(1, 2);
    for (int trial = 0; trial < 60; ++trial) {
        QIntFactors nf, df;
        for (int j = 0; j < 3; ++j) {
            nf[idx(rng)] += cnt(rng);
            df[idx(rng)] += cnt(rng);
        }
        QPoly pre = random_poly(rng, 3, 3);
        if (pre.is_zero()) pre = QPoly(1L);
        CAPTURE(trial);
        CHECK(reduce_qint_quotient(pre, nf, df, true) ==
              reduce_qint_quotient(pre, nf, df, false));
    }
}

TEST_CASE("q-integer quotient edge cases") {
    using detail::QIntFactors;
    using detail::reduce_qint_quotient;
    CHECK(reduce_qint_quotient(QPoly(), {{3, 1}}, {{2, 1}}) == QRat());
    CHECK(reduce_qint_quotient(QPoly(1L), {{0, 1}}, {{2, 1}}) == QRat());
    CHECK_THROWS_AS(reduce_qint_quotient(QPoly(1L), {{3, 1}}, {{0, 1}}), ZeroDenominator);
    CHECK(detail::expand_q_factors({{2, 1}, {3, 1}}) == q_int(2) * q_int(3));
    CHECK(detail::expand_q_factors({}) == QPoly(1L));
}

TEST_CASE("series expansion basics") {
    const QSeries geo = QSeries::from_rat(QRat::reduce(QPoly(1L), QPoly::from_coeffs({1, -1})), 6);
    for (int k = 0; k <= 6; ++k) CHECK(geo.coeff(k) == 1);

    const QSeries sq = geo * geo;  // 1/(1-q)^2
    for (int k = 0; k <= 6; ++k) CHECK(sq.coeff(k) == k + 1);

    CHECK(QSeries::from_poly(q_int(3), 5).coeff(2) == 1);
    CHECK(QSeries::from_poly(q_int(3), 5).coeff(3) == 0);

    CHECK_THROWS_AS(QSeries::from_rat(QRat::reduce(QPoly(1L), QPoly::from_coeffs({2, 1})), 4),
                    NonUnitConstantTerm);
}

TEST_CASE("series shift and hook division") {
    QSeries s = QSeries::from_poly(QPoly(1L), 8);
    s.divide_one_minus_q_pow(3);  // 1/(1-q^3)
    for (int k = 0; k <= 8; ++k) CHECK(s.coeff(k) == (k % 3 == 0 ? 1 : 0));
    const QSeries t = s.shifted(2);
    CHECK(t.coeff(2) == 1);
    CHECK(t.coeff(0) == 0);
    CHECK(t.coeff(5) == 1);

    // Dividing then multiplying by (1 - q^3) is the identity on the window.
    const QSeries back = t * QSeries::from_poly(one_minus_q_pow(3), 8);
    CHECK(back == QSeries::from_poly(QPoly::monomial(1, 2), 8));
}

TEST_CASE("series agrees with rational expansion on q-integer quotients") {
    // [10]_q / [5]_q = 1 + q^5 as both series and reduced rational.
    const QRat r = QRat::reduce(q_int(10), q_int(5));
    CHECK(r.is_polynomial());
    CHECK(QSeries::from_rat(r, 9) == QSeries::from_poly(QPoly::from_coeffs({1, 0, 0, 0, 0, 1}), 9));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> idx(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        // prod (1 - q^{a_i}) / (1 - q) ... always expandable: den has unit constant.
        QPoly num = q_int(idx(rng)) * q_int(idx(rng));
        QPoly den = q_int(idx(rng));
        const QRat r2 = QRat::reduce(num, den);
        if (r2.den().coeff(0) != 1 && r2.den().coeff(0) != -1) continue;
        const QSeries via_rat = QSeries::from_rat(r2, 12);
        // Independent route: expand numerator, divide by each denominator factor
        // of the *original* den = [k]_q = (1 - q^k)/(1 - q).
        QSeries direct = QSeries::from_poly(num, 12);
        direct = direct * QSeries::from_poly(QPoly::from_coeffs({1, -1}), 12);
        direct.divide_one_minus_q_pow(den.degree() + 1);
        CHECK(via_rat == direct);
    }
}

TEST_CASE("series rendering") {
    QSeries s(3);
    s.add_term(0, 1);
    s.add_term(2, 2);
    CHECK(s.str() == "1 + 2*q^2 + O(q^4)");
    CHECK(QSeries(2).str() == "0 + O(q^3)");
}
