#include "eyd/formulas.hpp"

#include <algorithm>
#include <vector>

namespace eyd {

namespace {

/* Hook lengths of all cells of lambda, indexed row-major over lambda's cells;
 * conjugate computed once. */
struct HookTable {
    explicit HookTable(const Partition& la) : la_(la), conj_(la.conjugate()) {}
    int at(Cell d) const {
        return la_.part(d.row) - d.col + conj_.part(d.col) - d.row + 1;
    }
    int col_height(int c) const { return conj_.part(c); }  // lambda'_c

private:
    const Partition& la_;
    Partition conj_;
};

/* Cells of lambda not covered by D, row-major. */
std::vector<Cell> complement_cells(const Partition& la, const Diagram& D) {
    std::vector<Cell> out;
    out.reserve(la.size() - D.size());
    for (int r = 1; r <= la.length(); ++r)
        for (int c = 1; c <= la.part(r); ++c)
            if (!D.contains({r, c})) out.push_back({r, c});
    return out;
}

void check_n_bound(const SkewShape& s, int n, NBound bound, const char* op) {
    if (n < 0) throw std::domain_error(std::string(op) + ": n must be nonnegative");
    if (bound == NBound::AtLeastLength && n < s.outer().length())
        throw std::domain_error(std::string(op) + ": n below length of the outer shape (" +
                                std::to_string(s.outer().length()) +
                                "); pass NBound::Unchecked to allow zero factors");
}

/* Indices n + content(d) over the given cells; NegativeQInt on any negative. */
std::vector<int> content_indices(const std::vector<Cell>& cells, int n) {
    std::vector<int> idx;
    idx.reserve(cells.size());
    for (Cell d : cells) {
        int k = n + content(d);
        if (k < 0)
            throw NegativeQInt("factor [n + content]_q with n + content = " + std::to_string(k) +
                               " at cell (" + std::to_string(d.row) + "," +
                               std::to_string(d.col) + ")");
        idx.push_back(k);
    }
    return idx;
}

mpz_class factorial(int m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
}

/* Common machinery for the excited-diagram sums: every term is a product of
 * q-integers divided by the term's hook q-integers. Terms are put over the
 * least common multiset of hook indices, summed as plain polynomials, and
 * reduced once at the end. */
struct QIntTerm {
    detail::QIntFactors num;  // product of [k]_q over these indices
    detail::QIntFactors den;
};

QRat sum_qint_terms(const std::vector<QIntTerm>& terms, const detail::QIntFactors& global_num) {
    detail::QIntFactors common;  // pointwise max of all term denominators
    for (const auto& t : terms)
        for (const auto& [k, count] : t.den) {
            auto& c = common[k];
            c = std::max(c, count);
        }
    QPoly total;
    for (const auto& t : terms) {
        detail::QIntFactors cofactor = common;
        for (const auto& [k, count] : t.den) {
            cofactor[k] -= count;
            if (cofactor[k] == 0) cofactor.erase(k);
        }
        QPoly term = detail::expand_q_factors(t.num) * detail::expand_q_factors(cofactor);
        total += term;
    }
    return detail::reduce_qint_quotient(std::move(total), global_num, common);
}

}  // namespace

mpz_class naruse_f(const SkewShape& s) {
    const HookTable hooks(s.outer());
    const mpz_class m_fact = factorial(s.size());
    // m! * sum_D 1/prod(h) = sum_D m!/prod(h), accumulated as an exact fraction.
    mpq_class total = 0;
    for (const Diagram& D : enumerate_eyd(s)) {
        mpz_class denom = 1;
        for (Cell d : complement_cells(s.outer(), D)) denom *= hooks.at(d);
        // mpq_class(a, b) does not reduce; mpq arithmetic needs canonical operands.
        mpq_class part(m_fact, denom);
        part.canonicalize();
        total += part;
    }
    if (total.get_den() != 1)
        throw NonIntegerResult("hook-length sum for " + s.str() + " is not an integer: " +
                               total.get_str());
    return total.get_num();
}

QRat naruse_f_q(const SkewShape& s) {
    const HookTable hooks(s.outer());
    std::vector<QIntTerm> terms;
    for (const Diagram& D : enumerate_eyd(s)) {
        QIntTerm t;
        for (Cell d : complement_cells(s.outer(), D)) ++t.den[hooks.at(d)];
        terms.push_back(std::move(t));
    }
    detail::QIntFactors m_fact;
    for (int k = 2; k <= s.size(); ++k) ++m_fact[k];
    return sum_qint_terms(terms, m_fact);
}

QPoly content_product(const SkewShape& s, int n, NBound bound) {
    check_n_bound(s, n, bound, "content_product");
    QPoly out(1L);
    for (int k : content_indices(s.cells(), n)) {
        if (k == 0) return QPoly();  // a [0]_q factor annihilates the product
        out *= q_int(k);
    }
    return out;
}

QRat hook_content_sum(const SkewShape& s, int n, NBound bound) {
    check_n_bound(s, n, bound, "hook_content_sum");
    const HookTable hooks(s.outer());
    std::vector<QIntTerm> terms;
    for (const Diagram& D : enumerate_eyd(s)) {
        const auto cells = complement_cells(s.outer(), D);
        QIntTerm t;
        for (Cell d : cells) ++t.den[hooks.at(d)];
        for (int k : content_indices(cells, n)) {
            if (k == 0) return QRat();  // the content multiset repeats in every term
            ++t.num[k];
        }
        terms.push_back(std::move(t));
    }
    detail::QIntFactors m_fact;
    for (int k = 2; k <= s.size(); ++k) ++m_fact[k];
    return sum_qint_terms(terms, m_fact);
}

QRat hook_content_product(const SkewShape& s, int n, NBound bound) {
    check_n_bound(s, n, bound, "hook_content_product");
    return naruse_f_q(s) * QRat(content_product(s, n, bound));
}

mpq_class hbar(const SkewShape& s, int n, NBound bound) {
    check_n_bound(s, n, bound, "hbar");
    QRat H = hook_content_product(s, n, bound);
    mpq_class via_product = H.limit_at_one() / factorial(s.size());

    // Corollary form: sum over excited diagrams of prod (n + content)/hook.
    const HookTable hooks(s.outer());
    mpq_class via_sum = 0;
    for (const Diagram& D : enumerate_eyd(s)) {
        mpq_class term = 1;
        for (Cell d : complement_cells(s.outer(), D)) {
            mpq_class factor(n + content(d), hooks.at(d));
            factor.canonicalize();
            term *= factor;
        }
        via_sum += term;
    }
    if (via_product != via_sum)
        throw std::logic_error("hbar paths disagree for " + s.str() + " at n=" +
                               std::to_string(n) + ": " + via_product.get_str() + " vs " +
                               via_sum.get_str());
    return via_product;
}

QRat principal_specialization(const Partition& la, int n) {
    if (n < 0) throw std::domain_error("principal_specialization: n must be nonnegative");
    const HookTable hooks(la);
    const auto cells = la.cells();
    std::vector<int> idx = content_indices(cells, n);
    if (std::find(idx.begin(), idx.end(), 0) != idx.end()) return QRat();

    detail::QIntFactors num, den;
    for (int k : idx) ++num[k];
    for (Cell d : cells) ++den[hooks.at(d)];
    QRat ratio = detail::reduce_qint_quotient(QPoly(1L), num, den);
    return QRat::reduce(ratio.num() * QPoly::monomial(1, static_cast<int>(la.b_stat())),
                        ratio.den());
}

QSeries skew_schur_series(const SkewShape& s, int order) {
    const HookTable hooks(s.outer());
    QSeries out(order);
    for (const Diagram& D : enumerate_eyd(s)) {
        long long exponent = 0;
        std::vector<int> hook_list;
        for (Cell d : complement_cells(s.outer(), D)) {
            exponent += hooks.col_height(d.col) - d.row;  // lambda'_c - r
            hook_list.push_back(hooks.at(d));
        }
        if (exponent > order) continue;  // term starts beyond the truncation
        QSeries term(order);
        term.add_term(static_cast<int>(exponent), 1);
        for (int h : hook_list) term.divide_one_minus_q_pow(h);
        out += term;
    }
    return out;
}

}  // namespace eyd
