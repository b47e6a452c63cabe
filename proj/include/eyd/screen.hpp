#pragma once

#include "eyd/partition.hpp"
#include "eyd/tableaux.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eyd {

enum class CheckKind { Theorem, Conj1, Conj2, Conj3, Eq2, Eq3, Eq4, LR, FqPolynomiality };
enum class CheckStatus { Pass, PassCanonical, Inconclusive, Fail, Skipped };

const char* to_string(CheckKind k);
const char* to_string(CheckStatus s);
std::optional<CheckKind> check_kind_from_string(std::string_view name);

/*
 * One screening outcome. Existential conjecture checks never report Fail:
 * a witness in canonical form gives PassCanonical, anything else is
 * Inconclusive with the full reduced data in detail for human review.
 * Fail records for identity checks carry both sides, fully reduced.
 */
struct ScreenRecord {
    Partition lambda, mu;
    std::optional<int> n;
    CheckKind check{};
    CheckStatus status{};
    std::string detail;
    double elapsed_sec = 0.0;
};

/* H(n;q): excited-diagram sum side versus factored side, exact equality. */
ScreenRecord run_check_theorem(const SkewShape& s, int n);

/* Hbar(n) must be a nonnegative integer. */
ScreenRecord run_check_conj1(const SkewShape& s, int n);

/* f_q as a/b with nonnegative coefficients and a(-1) >= 0, judged on the
 * canonical reduced form only. */
ScreenRecord run_check_conj2(const SkewShape& s);

/* Same classification for H(n;q)/[m]_q!. */
ScreenRecord run_check_conj3(const SkewShape& s, int n);

/* Skew series: excited-diagram expansion versus SSYT enumeration. */
ScreenRecord run_check_eq2(const SkewShape& s, int order, const OracleLimits& lim = {});

/* Straight-shape series in product form versus the excited-diagram
 * expansion; Skipped for proper skew shapes. */
ScreenRecord run_check_eq3(const SkewShape& s, int order);

/* Principal specialization closed form versus the SSYT weight polynomial
 * and versus q^b H(n;q)/[|lambda|]_q!; Skipped for proper skew shapes. */
ScreenRecord run_check_eq4(const SkewShape& s, int n, const OracleLimits& lim = {});

/* Hook-length counts against Littlewood-Richardson expansion. */
ScreenRecord run_check_lr(const SkewShape& s, const OracleLimits& lim = {});

/* Classification only: is reduced f_q a polynomial, are its coefficients
 * nonnegative, is every excited-diagram term individually integral at q=1. */
ScreenRecord run_check_fq_shape(const SkewShape& s);

struct SweepConfig {
    int max_size = 6;                  // ceiling on |lambda|
    std::vector<CheckKind> checks;     // empty means every kind
    int n_offset_lo = 0;               // n runs over length(lambda) + lo .. + hi
    int n_offset_hi = 3;
    int order = 20;                    // series truncation for Eq2/Eq3
    int workers = 1;
    bool json = false;                 // one JSON object per line instead of text
    bool timings = false;              // real elapsed times; breaks byte-reproducibility
    OracleLimits limits{};
};

struct SweepSummary {
    long pass = 0, pass_canonical = 0, inconclusive = 0, fail = 0, skipped = 0;
    long total() const { return pass + pass_canonical + inconclusive + fail + skipped; }
};

std::string format_record_text(const ScreenRecord& rec, bool timings);
std::string format_record_json(const ScreenRecord& rec, bool timings);

/*
 * Deterministic sweep over all lambda with |lambda| <= max_size, all
 * mu inside lambda, all configured checks and n offsets. Records appear in a
 * fixed (lambda, mu, n, check) order whatever the worker count. A previous
 * partial output stream may be passed to resume: records whose keys it
 * already holds are re-emitted verbatim without recomputation, and the final
 * file equals a cold run's. A '#'-prefixed summary line closes the output.
 */
SweepSummary run_sweep(const SweepConfig& cfg, std::istream* resume_from, std::ostream& out);

}  // namespace eyd
