#pragma once

#include "eyd/partition.hpp"
#include "eyd/qpoly.hpp"
#include "eyd/qseries.hpp"

#include <map>

namespace eyd {

struct SizeLimitExceeded : std::runtime_error {
    explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/* Ceilings for the brute-force enumerators. They exist to keep accidental
 * huge inputs from hanging a run; raise them deliberately when needed. */
struct OracleLimits {
    int syt_cells = 12;
    int ssyt_cells = 10;
    int lr_cells = 12;
};

/*
 * These count by direct backtracking over tableaux and are deliberately
 * independent of the excited-diagram machinery: they are the reference
 * values the formulas are tested against.
 */

/* Standard tableaux of shape lambda/mu: entries 1..m, rows and columns
 * strictly increasing. */
mpz_class count_syt(const SkewShape& s, const OracleLimits& lim = {});

/* Semistandard tableaux with entries in 1..max_entry: rows weakly, columns
 * strictly increasing. */
mpz_class count_ssyt(const SkewShape& s, int max_entry, const OracleLimits& lim = {});

/* Weight generating polynomial sum over SSYT of q^{sum (entry - 1)} with
 * entries in 1..max_entry. */
QPoly ssyt_genpoly(const SkewShape& s, int max_entry, const OracleLimits& lim = {});

/* Truncated series sum over all SSYT (unbounded entries) of
 * q^{sum (entry - 1)}. Entries above order+1 cannot reach degree <= order,
 * so the enumeration caps there. */
QSeries ssyt_series(const SkewShape& s, int order, const OracleLimits& lim = {});

/*
 * Littlewood-Richardson coefficients c^lambda_{mu nu} for all nu, found by
 * enumerating SSYT of shape lambda/mu whose reverse reading word (right to
 * left along each row, rows top to bottom) is a lattice word; nu is the
 * content. Partitions nu with coefficient zero are absent from the map.
 */
std::map<Partition, long long> lr_coefficients(const Partition& la, const Partition& mu,
                                               const OracleLimits& lim = {});

/* Checks f(lambda/mu) = sum_nu c^lambda_{mu nu} f(nu/0) with both sides from
 * independent routes: the left by the excited-diagram formula, the right by
 * LR enumeration plus straight-shape hook lengths. */
bool lr_identity_check(const Partition& la, const Partition& mu, const OracleLimits& lim = {});

}  // namespace eyd
