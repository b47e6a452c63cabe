#include "eyd/tableaux.hpp"

#include "eyd/formulas.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace eyd {

namespace {

/* Row-major cell list with neighbor indices resolved once. */
struct Grid {
    explicit Grid(const SkewShape& s) : cells(s.cells()) {
        left.assign(cells.size(), -1);
        up.assign(cells.size(), -1);
        for (size_t i = 0; i < cells.size(); ++i) {
            for (size_t j = 0; j < i; ++j) {
                if (cells[j].row == cells[i].row && cells[j].col == cells[i].col - 1)
                    left[i] = static_cast<int>(j);
                if (cells[j].col == cells[i].col && cells[j].row == cells[i].row - 1)
                    up[i] = static_cast<int>(j);
            }
        }
    }
    std::vector<Cell> cells;
    std::vector<int> left, up;
};

void check_limit(int cells, int limit, const char* what) {
    if (cells > limit)
        throw SizeLimitExceeded(std::string(what) + ": shape has " + std::to_string(cells) +
                                " cells, limit is " + std::to_string(limit));
}

/* Backtracking SSYT enumeration, row-major fill. Entry bounds come from the
 * left neighbor (weak) and the upper neighbor (strict). weight_cap < 0 means
 * no pruning by weight; otherwise branches whose weight must exceed the cap
 * are cut, using the column-forced minimum entry of the remaining cells. */
template <class Visit>
void for_each_ssyt(const Grid& g, int max_entry, long weight_cap, Visit&& visit) {
    const size_t m = g.cells.size();
    std::vector<int> entry(m, 0);
    std::vector<int> min_entry(m, 1);
    for (size_t i = 0; i < m; ++i)
        if (g.up[i] >= 0) min_entry[i] = min_entry[g.up[i]] + 1;
    std::vector<long> min_rest(m + 1, 0);  // least extra weight cells i.. can add
    for (size_t i = m; i-- > 0;) min_rest[i] = min_rest[i + 1] + (min_entry[i] - 1);

    std::function<void(size_t, long)> rec = [&](size_t i, long weight) {
        if (weight_cap >= 0 && weight + min_rest[i] > weight_cap) return;
        if (i == m) {
            visit(entry, weight);
            return;
        }
        int lo = min_entry[i];
        if (g.left[i] >= 0) lo = std::max(lo, entry[g.left[i]]);
        if (g.up[i] >= 0) lo = std::max(lo, entry[g.up[i]] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            if (weight_cap >= 0 && weight + (v - 1) + min_rest[i + 1] > weight_cap) break;
            entry[i] = v;
            rec(i + 1, weight + (v - 1));
        }
        entry[i] = 0;
    };
    rec(0, 0);
}

}  // namespace

mpz_class count_syt(const SkewShape& s, const OracleLimits& lim) {
    check_limit(s.size(), lim.syt_cells, "count_syt");
    const Partition& la = s.outer();
    const Partition& mu = s.inner();
    const int rows = la.length();
    // next_col[r]: first unfilled column of row r+1; rows fill left to right.
    std::vector<int> next_col(rows);
    for (int r = 0; r < rows; ++r) next_col[r] = mu.part(r + 1) + 1;

    mpz_class total = 0;
    std::function<void(int)> rec = [&](int placed) {
        if (placed == s.size()) {
            ++total;
            return;
        }
        for (int r = 0; r < rows; ++r) {
            const int c = next_col[r];
            if (c > la.part(r + 1)) continue;
            if (r > 0 && c > mu.part(r) && next_col[r - 1] <= c) continue;  // upper not filled
            ++next_col[r];
            rec(placed + 1);
            --next_col[r];
        }
    };
    rec(0);
    return total;
}

mpz_class count_ssyt(const SkewShape& s, int max_entry, const OracleLimits& lim) {
    check_limit(s.size(), lim.ssyt_cells, "count_ssyt");
    if (max_entry < 0) throw std::invalid_argument("count_ssyt: negative entry bound");
    Grid g(s);
    mpz_class total = 0;
    for_each_ssyt(g, max_entry, -1, [&](const std::vector<int>&, long) { ++total; });
    return total;
}

QPoly ssyt_genpoly(const SkewShape& s, int max_entry, const OracleLimits& lim) {
    check_limit(s.size(), lim.ssyt_cells, "ssyt_genpoly");
    if (max_entry < 0) throw std::invalid_argument("ssyt_genpoly: negative entry bound");
    Grid g(s);
    std::vector<mpz_class> coeffs;
    for_each_ssyt(g, max_entry, -1, [&](const std::vector<int>&, long w) {
        if (w >= static_cast<long>(coeffs.size())) coeffs.resize(w + 1, 0);
        ++coeffs[w];
    });
    return QPoly::from_coeffs(std::move(coeffs));
}

QSeries ssyt_series(const SkewShape& s, int order, const OracleLimits& lim) {
    check_limit(s.size(), lim.ssyt_cells, "ssyt_series");
    Grid g(s);
    QSeries out(order);
    for_each_ssyt(g, order + 1, order,
                  [&](const std::vector<int>&, long w) { out.add_term(static_cast<int>(w), 1); });
    return out;
}

std::map<Partition, long long> lr_coefficients(const Partition& la, const Partition& mu,
                                               const OracleLimits& lim) {
    SkewShape s(la, mu);
    check_limit(s.size(), lim.lr_cells, "lr_coefficients");
    const int m = s.size();

    // Cells in reverse reading order: rows top to bottom, right to left inside
    // a row, so the lattice property can be enforced as entries are placed.
    std::vector<Cell> cells;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = la.part(r); c > mu.part(r); --c) cells.push_back({r, c});

    std::map<Partition, long long> out;
    std::vector<int> entry(cells.size(), 0);
    std::vector<int> count(m + 2, 0);  // occurrences of each value so far

    auto entry_at = [&](int row, int col) {
        for (size_t j = 0; j < cells.size(); ++j)
            if (cells[j].row == row && cells[j].col == col) return entry[j];
        return 0;
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cells.size()) {
            std::vector<int> nu(count.begin() + 1, count.begin() + 1 + m);
            ++out[Partition(std::move(nu))];
            return;
        }
        const Cell d = cells[i];
        int lo = 1, hi = std::min(d.row, m);
        if (s.outer().part(d.row) > d.col && s.inner().part(d.row) < d.col + 1) {
            // right neighbor (same row) is already placed; weak increase
            hi = std::min(hi, entry_at(d.row, d.col + 1));
        }
        if (d.row > 1 && d.col > s.inner().part(d.row - 1) && d.col <= s.outer().part(d.row - 1)) {
            lo = std::max(lo, entry_at(d.row - 1, d.col) + 1);  // column strict
        }
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice prefix
            entry[i] = v;
            ++count[v];
            rec(i + 1);
            --count[v];
            entry[i] = 0;
        }
    };
    rec(0);
    return out;
}

bool lr_identity_check(const Partition& la, const Partition& mu, const OracleLimits& lim) {
    SkewShape s(la, mu);
    mpz_class lhs = naruse_f(s);
    mpz_class rhs = 0;
    for (const auto& [nu, coeff] : lr_coefficients(la, mu, lim))
        rhs += mpz_class(static_cast<long>(coeff)) * naruse_f(SkewShape(nu));
    return lhs == rhs;
}

}  // namespace eyd
