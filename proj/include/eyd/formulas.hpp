#pragma once

#include "eyd/excited.hpp"
#include "eyd/partition.hpp"
#include "eyd/qrat.hpp"
#include "eyd/qseries.hpp"

namespace eyd {

struct NegativeQInt : std::domain_error {
    explicit NegativeQInt(const std::string& what) : std::domain_error(what) {}
};

struct NonIntegerResult : std::logic_error {
    explicit NonIntegerResult(const std::string& what) : std::logic_error(what) {}
};

/* The hook-content operations refuse n < length(lambda) unless the caller
 * opts in; the opt-in admits [0]_q factors, a negative index never passes. */
enum class NBound { AtLeastLength, Unchecked };

/*
 * Number of standard tableaux of shape lambda/mu by the excited-diagram
 * hook-length formula:
 *   f = |lambda/mu|! * sum over excited diagrams D of
 *       prod_{d in lambda minus D} 1/hook(d).
 * Exact integer arithmetic throughout; a non-integral total would be a bug
 * and raises NonIntegerResult.
 */
mpz_class naruse_f(const SkewShape& s);

/*
 * q-analogue of the same sum:
 *   f_q = [m]_q! * sum_D prod_{d in lambda minus D} 1/[hook(d)]_q,
 * m = |lambda/mu|, returned fully reduced. The limit at q = 1 is naruse_f.
 */
QRat naruse_f_q(const SkewShape& s);

/*
 * prod over cells d of lambda/mu of [n + content(d)]_q. Zero exactly when
 * some factor is [0]_q; a negative n + content(d) raises NegativeQInt.
 */
QPoly content_product(const SkewShape& s, int n, NBound bound = NBound::AtLeastLength);

/*
 * The two sides of the hook-content identity
 *   H(n; q) = [m]_q! * sum_D prod_{d in lambda minus D}
 *             (1 - q^{n + content(d)}) / (1 - q^{hook(d)})
 *           = f_q * prod_{d in lambda/mu} [n + content(d)]_q.
 * hook_content_sum evaluates the excited-diagram sum literally;
 * hook_content_product evaluates the factored right side. Both reduce to
 * canonical form, so agreement is structural equality.
 */
QRat hook_content_sum(const SkewShape& s, int n, NBound bound = NBound::AtLeastLength);
QRat hook_content_product(const SkewShape& s, int n, NBound bound = NBound::AtLeastLength);

/*
 * Hbar(n) = H(n; 1) / m!, computed from the product form, and cross-checked
 * against the direct value sum_D prod_{d in lambda minus D}
 * (n + content(d)) / hook(d); disagreement raises NonIntegerResult's sibling,
 * an assertion failure in spirit, as std::logic_error.
 */
mpq_class hbar(const SkewShape& s, int n, NBound bound = NBound::AtLeastLength);

/*
 * Principal specialization of the Schur polynomial in n variables,
 *   s_lambda(1, q, ..., q^{n-1}) = q^{b(lambda)} *
 *       prod_{d in lambda} [n + content(d)]_q / [hook(d)]_q,
 * which is a polynomial; n >= 0. Zero when n < length(lambda).
 */
QRat principal_specialization(const Partition& la, int n);

/*
 * Truncated expansion of the skew Schur function evaluated at
 * (1, q, q^2, ...):
 *   s_{lambda/mu}(1, q, ...) = sum_D prod_{(r,c) in lambda minus D}
 *       q^{lambda'_c - r} / (1 - q^{hook(r,c)}).
 */
QSeries skew_schur_series(const SkewShape& s, int order);

}  // namespace eyd
