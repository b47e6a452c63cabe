#include "eyd/screen.hpp"

#include "eyd/formulas.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>

namespace eyd {

namespace {

constexpr CheckKind kAllKinds[] = {CheckKind::Theorem, CheckKind::Conj1,  CheckKind::Conj2,
                                   CheckKind::Conj3,   CheckKind::Eq2,    CheckKind::Eq3,
                                   CheckKind::Eq4,     CheckKind::LR,     CheckKind::FqPolynomiality};

bool uses_n(CheckKind k) {
    switch (k) {
        case CheckKind::Theorem:
        case CheckKind::Conj1:
        case CheckKind::Conj3:
        case CheckKind::Eq4:
            return true;
        default:
            return false;
    }
}

std::string rat_str(const mpq_class& v) { return v.get_str(); }

bool nonneg_coeffs(const QPoly& p) {
    for (const auto& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

/* PassCanonical / Inconclusive classification shared by Conj2 and Conj3. */
ScreenRecord classify_existential(ScreenRecord rec, const QRat& value, const char* name) {
    mpq_class at_minus_one = value.num().eval_at(-1);
    bool ok = nonneg_coeffs(value.num()) && nonneg_coeffs(value.den()) && at_minus_one >= 0;
    std::ostringstream d;
    if (ok) {
        rec.status = CheckStatus::PassCanonical;
        d << name << " canonical form has nonnegative coefficients; num(-1) = "
          << rat_str(at_minus_one);
        if (value.is_polynomial()) d << "; polynomial";
    } else {
        rec.status = CheckStatus::Inconclusive;
        d << name << " canonical form is not a witness (num(-1) = " << rat_str(at_minus_one)
          << "); " << name << " = " << value.str();
    }
    rec.detail = d.str();
    return rec;
}

template <class Fn>
ScreenRecord timed(ScreenRecord rec, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn(rec);
    rec.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

ScreenRecord base_record(const SkewShape& s, std::optional<int> n, CheckKind kind) {
    ScreenRecord rec;
    rec.lambda = s.outer();
    rec.mu = s.inner();
    rec.n = n;
    rec.check = kind;
    return rec;
}

}  // namespace

const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::Theorem: return "Theorem";
        case CheckKind::Conj1: return "Conj1";
        case CheckKind::Conj2: return "Conj2";
        case CheckKind::Conj3: return "Conj3";
        case CheckKind::Eq2: return "Eq2";
        case CheckKind::Eq3: return "Eq3";
        case CheckKind::Eq4: return "Eq4";
        case CheckKind::LR: return "LR";
        case CheckKind::FqPolynomiality: return "FqPolynomiality";
    }
    return "?";
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "Pass";
        case CheckStatus::PassCanonical: return "PassCanonical";
        case CheckStatus::Inconclusive: return "Inconclusive";
        case CheckStatus::Fail: return "Fail";
        case CheckStatus::Skipped: return "Skipped";
    }
    return "?";
}

std::optional<CheckKind> check_kind_from_string(std::string_view name) {
    for (CheckKind k : kAllKinds)
        if (name == to_string(k)) return k;
    return std::nullopt;
}

ScreenRecord run_check_theorem(const SkewShape& s, int n) {
    return timed(base_record(s, n, CheckKind::Theorem), [&](ScreenRecord& rec) {
        QRat sum_side = hook_content_sum(s, n);
        QRat product_side = hook_content_product(s, n);
        if (sum_side == product_side) {
            rec.status = CheckStatus::Pass;
            rec.detail = "H(" + std::to_string(n) + ";1) = " + rat_str(sum_side.limit_at_one());
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "sum side = " + sum_side.str() + " ; product side = " +
                         product_side.str();
        }
    });
}

ScreenRecord run_check_conj1(const SkewShape& s, int n) {
    return timed(base_record(s, n, CheckKind::Conj1), [&](ScreenRecord& rec) {
        mpq_class v = hbar(s, n);
        if (v.get_den() == 1 && v >= 0) {
            rec.status = CheckStatus::Pass;
            rec.detail = "Hbar = " + rat_str(v);
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "Hbar = " + rat_str(v) + " is not a nonnegative integer";
        }
    });
}

ScreenRecord run_check_conj2(const SkewShape& s) {
    return timed(base_record(s, std::nullopt, CheckKind::Conj2), [&](ScreenRecord& rec) {
        rec = classify_existential(std::move(rec), naruse_f_q(s), "f_q");
    });
}

ScreenRecord run_check_conj3(const SkewShape& s, int n) {
    return timed(base_record(s, n, CheckKind::Conj3), [&](ScreenRecord& rec) {
        QRat fq = naruse_f_q(s);
        QRat ratio = hook_content_product(s, n) / QRat(q_factorial(s.size()));
        rec = classify_existential(std::move(rec), ratio, "H/[m]!");
        if (ratio == fq) rec.detail += "; coincides with f_q";
    });
}

ScreenRecord run_check_eq2(const SkewShape& s, int order, const OracleLimits& lim) {
    return timed(base_record(s, std::nullopt, CheckKind::Eq2), [&](ScreenRecord& rec) {
        if (s.size() > lim.ssyt_cells) {
            rec.status = CheckStatus::Skipped;
            rec.detail = "shape exceeds SSYT oracle limit of " + std::to_string(lim.ssyt_cells) +
                         " cells";
            return;
        }
        QSeries lhs = skew_schur_series(s, order);
        QSeries rhs = ssyt_series(s, order, lim);
        if (lhs == rhs) {
            rec.status = CheckStatus::Pass;
            rec.detail = "series agree to order " + std::to_string(order);
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "excited-diagram series = " + lhs.str() + " ; SSYT series = " +
                         rhs.str();
        }
    });
}

ScreenRecord run_check_eq3(const SkewShape& s, int order) {
    return timed(base_record(s, std::nullopt, CheckKind::Eq3), [&](ScreenRecord& rec) {
        if (!s.inner().empty()) {
            rec.status = CheckStatus::Skipped;
            rec.detail = "straight shapes only";
            return;
        }
        const Partition& la = s.outer();
        QPoly den(1L);
        for (Cell d : la.cells()) {
            QPoly factor = -QPoly::monomial(1, hook(la, d));
            factor += QPoly(1L);
            den *= factor;  // (1 - q^hook)
        }
        QRat closed = QRat::reduce(QPoly::monomial(1, static_cast<int>(la.b_stat())), den);
        QSeries lhs = skew_schur_series(s, order);
        QSeries rhs = QSeries::from_rat(closed, order);
        if (lhs == rhs) {
            rec.status = CheckStatus::Pass;
            rec.detail = "series agree to order " + std::to_string(order);
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "excited-diagram series = " + lhs.str() + " ; product form = " +
                         rhs.str();
        }
    });
}

ScreenRecord run_check_eq4(const SkewShape& s, int n, const OracleLimits& lim) {
    return timed(base_record(s, n, CheckKind::Eq4), [&](ScreenRecord& rec) {
        if (!s.inner().empty()) {
            rec.status = CheckStatus::Skipped;
            rec.detail = "straight shapes only";
            return;
        }
        if (s.size() > lim.ssyt_cells) {
            rec.status = CheckStatus::Skipped;
            rec.detail = "shape exceeds SSYT oracle limit of " + std::to_string(lim.ssyt_cells) +
                         " cells";
            return;
        }
        const Partition& la = s.outer();
        QRat closed = principal_specialization(la, n);
        QRat oracle = QRat(ssyt_genpoly(s, n, lim));
        QPoly bshift = QPoly::monomial(1, static_cast<int>(la.b_stat()));
        QRat via_h = QRat(bshift) * hook_content_product(s, n) / QRat(q_factorial(la.size()));
        if (closed == oracle && closed == via_h) {
            rec.status = CheckStatus::Pass;
            rec.detail = "closed form = SSYT polynomial = q^b H/[m]!";
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "closed form = " + closed.str() + " ; SSYT polynomial = " +
                         oracle.str() + " ; q^b H/[m]! = " + via_h.str();
        }
    });
}

ScreenRecord run_check_lr(const SkewShape& s, const OracleLimits& lim) {
    return timed(base_record(s, std::nullopt, CheckKind::LR), [&](ScreenRecord& rec) {
        if (s.size() > lim.lr_cells) {
            rec.status = CheckStatus::Skipped;
            rec.detail = "shape exceeds LR oracle limit of " + std::to_string(lim.lr_cells) +
                         " cells";
            return;
        }
        mpz_class lhs = naruse_f(s);
        mpz_class rhs = 0;
        std::ostringstream terms;
        for (const auto& [nu, coeff] : lr_coefficients(s.outer(), s.inner(), lim)) {
            rhs += mpz_class(static_cast<long>(coeff)) * naruse_f(SkewShape(nu));
            if (terms.tellp() > 0) terms << " + ";
            terms << coeff << "*f(" << nu.str() << ")";
        }
        if (lhs == rhs) {
            rec.status = CheckStatus::Pass;
            rec.detail = "f = " + lhs.get_str();
        } else {
            rec.status = CheckStatus::Fail;
            rec.detail = "f = " + lhs.get_str() + " but LR expansion " + terms.str() + " = " +
                         rhs.get_str();
        }
    });
}

ScreenRecord run_check_fq_shape(const SkewShape& s) {
    return timed(base_record(s, std::nullopt, CheckKind::FqPolynomiality), [&](ScreenRecord& rec) {
        QRat fq = naruse_f_q(s);
        bool every_term_integral = true;
        {
            const Partition& la = s.outer();
            mpz_class m_fact;
            mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(s.size()));
            for (const Diagram& D : enumerate_eyd(s)) {
                mpz_class denom = 1;
                for (int r = 1; r <= la.length(); ++r)
                    for (int c = 1; c <= la.part(r); ++c)
                        if (!D.contains({r, c})) denom *= hook(la, {r, c});
                if (m_fact % denom != 0) {
                    every_term_integral = false;
                    break;
                }
            }
        }
        rec.status = CheckStatus::Pass;
        std::ostringstream d;
        d << "polynomial=" << (fq.is_polynomial() ? "yes" : "no")
          << " nonneg=" << (nonneg_coeffs(fq.num()) && nonneg_coeffs(fq.den()) ? "yes" : "no")
          << " terms-integral=" << (every_term_integral ? "yes" : "no");
        rec.detail = d.str();
    });
}

namespace {

std::string shape_token(const ScreenRecord& rec) {
    return SkewShape(rec.lambda, rec.mu).str();
}

std::string n_token(const std::optional<int>& n) {
    return n ? "n=" + std::to_string(*n) : "-";
}

std::string record_key(const std::string& shape, const std::string& n, const std::string& check) {
    return shape + " " + n + " " + check;
}

std::string elapsed_token(const ScreenRecord& rec, bool timings) {
    if (!timings) return "-";
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << rec.elapsed_sec << "s";
    return os.str();
}

}  // namespace

std::string format_record_text(const ScreenRecord& rec, bool timings) {
    std::ostringstream os;
    os << std::left << std::setw(24) << shape_token(rec) << ' ' << std::setw(6)
       << n_token(rec.n) << ' ' << std::setw(16) << to_string(rec.check) << ' ' << std::setw(14)
       << to_string(rec.status) << ' ' << std::setw(8) << elapsed_token(rec, timings) << ' '
       << rec.detail;
    return os.str();
}

std::string format_record_json(const ScreenRecord& rec, bool timings) {
    nlohmann::ordered_json j;
    j["lambda"] = rec.lambda.str();
    j["mu"] = rec.mu.str();
    if (rec.n)
        j["n"] = *rec.n;
    else
        j["n"] = nullptr;
    j["check"] = to_string(rec.check);
    j["status"] = to_string(rec.status);
    if (timings)
        j["elapsed"] = rec.elapsed_sec;
    else
        j["elapsed"] = nullptr;
    j["detail"] = rec.detail;
    return j.dump();
}

namespace {

struct EmittedRecord {
    std::string key;
    std::string line;
    CheckStatus status{};
};

struct SweepTask {
    SkewShape shape;
    std::vector<int> ns;
    std::vector<CheckKind> checks_no_n;    // enum order, emitted before the n blocks
    std::vector<CheckKind> checks_with_n;  // enum order, emitted once per n
};

std::vector<CheckKind> effective_checks(const SweepConfig& cfg) {
    if (cfg.checks.empty()) return {std::begin(kAllKinds), std::end(kAllKinds)};
    std::vector<CheckKind> out;
    for (CheckKind k : kAllKinds)  // normalize to enum order, drop duplicates
        for (CheckKind c : cfg.checks)
            if (c == k) {
                out.push_back(k);
                break;
            }
    return out;
}

ScreenRecord run_one(const SweepTask& t, CheckKind k, std::optional<int> n,
                     const SweepConfig& cfg) {
    const SkewShape& s = t.shape;
    switch (k) {
        case CheckKind::Theorem: return run_check_theorem(s, *n);
        case CheckKind::Conj1: return run_check_conj1(s, *n);
        case CheckKind::Conj2: return run_check_conj2(s);
        case CheckKind::Conj3: return run_check_conj3(s, *n);
        case CheckKind::Eq2: return run_check_eq2(s, cfg.order, cfg.limits);
        case CheckKind::Eq3: return run_check_eq3(s, cfg.order);
        case CheckKind::Eq4: {
            if (n) return run_check_eq4(s, *n, cfg.limits);
            // skew shape slot: the check skips before reading n
            ScreenRecord rec = run_check_eq4(s, 0, cfg.limits);
            rec.n.reset();
            return rec;
        }
        case CheckKind::LR: return run_check_lr(s, cfg.limits);
        case CheckKind::FqPolynomiality: return run_check_fq_shape(s);
    }
    throw std::logic_error("unknown check kind");
}

std::vector<EmittedRecord> run_task(const SweepTask& t, const SweepConfig& cfg,
                                    const std::map<std::string, EmittedRecord>& existing) {
    std::vector<EmittedRecord> out;
    const std::string shape = t.shape.str();
    auto emit = [&](CheckKind k, std::optional<int> n) {
        EmittedRecord e;
        e.key = record_key(shape, n_token(n), to_string(k));
        if (auto it = existing.find(e.key); it != existing.end()) {
            out.push_back(it->second);
            return;
        }
        ScreenRecord rec = run_one(t, k, n, cfg);
        e.line = cfg.json ? format_record_json(rec, cfg.timings)
                          : format_record_text(rec, cfg.timings);
        e.status = rec.status;
        out.push_back(std::move(e));
    };
    for (CheckKind k : t.checks_no_n) emit(k, std::nullopt);
    for (int n : t.ns)
        for (CheckKind k : t.checks_with_n) emit(k, n);
    return out;
}

std::optional<CheckStatus> status_from_string(std::string_view name) {
    for (CheckStatus s : {CheckStatus::Pass, CheckStatus::PassCanonical,
                          CheckStatus::Inconclusive, CheckStatus::Fail, CheckStatus::Skipped})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

/* Recover (key, line, status) entries from a previous run's output. Lines that
 * do not parse (for instance a line torn by an interrupted write) are dropped. */
std::map<std::string, EmittedRecord> parse_existing(std::istream& in, bool json) {
    std::map<std::string, EmittedRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        EmittedRecord e;
        e.line = line;
        if (json) {
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object()) continue;
            if (!j.contains("lambda") || !j.contains("mu") || !j.contains("n") ||
                !j.contains("check") || !j.contains("status"))
                continue;
            auto status = status_from_string(j["status"].get<std::string>());
            if (!status) continue;
            e.status = *status;
            std::string shape;
            try {
                Partition la = Partition::parse(j["lambda"].get<std::string>());
                Partition mu = Partition::parse(j["mu"].get<std::string>());
                shape = SkewShape(la, mu).str();
            } catch (const std::exception&) {
                continue;
            }
            std::string n = j["n"].is_null() ? "-" : "n=" + std::to_string(j["n"].get<int>());
            e.key = record_key(shape, n, j["check"].get<std::string>());
        } else {
            std::istringstream is(line);
            std::string shape, n, check, status;
            if (!(is >> shape >> n >> check >> status)) continue;
            auto st = status_from_string(status);
            if (!st || !check_kind_from_string(check)) continue;
            e.status = *st;
            e.key = record_key(shape, n, check);
        }
        out.emplace(std::move(e.key), std::move(e));
    }
    return out;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg, std::istream* resume_from, std::ostream& out) {
    if (cfg.max_size < 0) throw std::invalid_argument("sweep: negative size ceiling");
    if (cfg.n_offset_lo < 0 || cfg.n_offset_hi < cfg.n_offset_lo)
        throw std::invalid_argument("sweep: bad n offset range");
    if (cfg.workers < 1) throw std::invalid_argument("sweep: need at least one worker");

    const std::vector<CheckKind> kinds = effective_checks(cfg);
    std::map<std::string, EmittedRecord> existing;
    if (resume_from) existing = parse_existing(*resume_from, cfg.json);

    std::vector<SweepTask> tasks;
    for (const Partition& la : partitions_up_to(cfg.max_size)) {
        for (const Partition& mu : subpartitions(la)) {
            SweepTask t{SkewShape(la, mu), {}, {}, {}};
            const bool straight = mu.empty();
            for (CheckKind k : kinds) {
                if (uses_n(k)) {
                    if (k == CheckKind::Eq4 && !straight)
                        t.checks_no_n.push_back(k);  // one Skipped record, no n
                    else
                        t.checks_with_n.push_back(k);
                } else {
                    t.checks_no_n.push_back(k);
                }
            }
            for (int off = cfg.n_offset_lo; off <= cfg.n_offset_hi; ++off)
                t.ns.push_back(static_cast<int>(la.length()) + off);
            tasks.push_back(std::move(t));
        }
    }

    std::vector<std::optional<std::vector<EmittedRecord>>> done(tasks.size());
    std::mutex mtx;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            std::vector<EmittedRecord> block;
            try {
                block = run_task(tasks[i], cfg, existing);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!failure) failure = std::current_exception();
                cv.notify_all();
                return;
            }
            std::lock_guard<std::mutex> lock(mtx);
            done[i] = std::move(block);
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    const size_t nworkers = std::min<size_t>(cfg.workers, std::max<size_t>(tasks.size(), 1));
    pool.reserve(nworkers);
    for (size_t w = 0; w < nworkers; ++w) pool.emplace_back(worker);

    SweepSummary summary;
    {
        std::unique_lock<std::mutex> lock(mtx);
        for (size_t i = 0; i < tasks.size(); ++i) {
            cv.wait(lock, [&] { return done[i].has_value() || failure; });
            if (failure) break;
            for (const EmittedRecord& e : *done[i]) {
                out << e.line << '\n';
                switch (e.status) {
                    case CheckStatus::Pass: ++summary.pass; break;
                    case CheckStatus::PassCanonical: ++summary.pass_canonical; break;
                    case CheckStatus::Inconclusive: ++summary.inconclusive; break;
                    case CheckStatus::Fail: ++summary.fail; break;
                    case CheckStatus::Skipped: ++summary.skipped; break;
                }
            }
            out.flush();
            done[i].reset();
        }
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    out << "# summary: pass=" << summary.pass << " passcanonical=" << summary.pass_canonical
        << " inconclusive=" << summary.inconclusive << " fail=" << summary.fail
        << " skipped=" << summary.skipped << " total=" << summary.total() << '\n';
    out.flush();
    return summary;
}

}  // namespace eyd
