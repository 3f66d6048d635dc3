#pragma once

// Orchestration of the full certificate pipeline plus the batch harnesses,
// producing machine-readable reports. The JSON schema of the analysis report
// is frozen: top-level keys are exactly
//   {input, T, is_ci, hilbert, socle, assoc_form, condition_smooth,
//    condition_veronese, slp, consistency, timing}
// and identical inputs with identical seeds produce byte-identical output
// (timing is nulled by the no-timing switch for that purpose).
//
// Prime-field runs are screening runs: positive Artinian certificates carry
// over to characteristic zero, negative ones do not. The sweep therefore
// re-verifies every negative over the rationals before reporting it.

#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "aci.hpp"
#include "assoc_form.hpp"
#include "graded.hpp"
#include "parser.hpp"
#include "projgeom.hpp"
#include "slp.hpp"
#include "system_io.hpp"

namespace lefschetz {

using OrderedJson = nlohmann::ordered_json;

struct AnalyzeOptions {
    FieldConfig field = FieldConfig::rationals();
    std::vector<int> k_list{1};
    int trials = 20;
    std::uint64_t seed = 1;
    int coeff_bound = 50;
    bool with_timing = true;
};

struct AnalysisResult {
    OrderedJson report;
    int exit_code = 0;  // 0 success, 1 non-CI input, 2 consistency violation
};

namespace detail {

class StageTimer {
public:
    double lap_ms() {
        const auto now = Clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point last_ = Clock::now();
};

inline OrderedJson json_or_null(const std::optional<std::string>& s) {
    return s ? OrderedJson(*s) : OrderedJson(nullptr);
}

template <Scalar F>
OrderedJson slp_verdict_json(const SlpVerdict<F>& v, const std::vector<std::string>& vars) {
    OrderedJson j;
    j["k"] = v.k;
    j["map_degree"] = v.map_degree;
    j["status"] = to_string(v.status);
    j["witness"] = v.witness ? OrderedJson(v.witness->to_string(vars)) : OrderedJson(nullptr);
    j["trials_used"] = v.trials_used;
    j["trials_budget"] = v.trials_budget;
    j["field"] = v.field.to_string();
    j["seed"] = v.seed;
    j["det_degree_bound"] = v.det_degree_bound;
    j["sample_size"] = v.sample_size;
    return j;
}

// Dense coefficient lists over the full degree-T monomial basis, exact and
// projectively normalized (leading standard coefficient 1), plus the
// apolarity verification flag.
template <Scalar F>
OrderedJson assoc_form_json(const AssociatedForm<F>& a, const ApolarReport& apolar) {
    const std::size_t n = a.form.nvars();
    const int t = a.form.degree();
    const std::vector<std::string> dual = default_var_names(VarSpace::Dual, n);
    const Poly<F> normalized = a.normalized();
    OrderedJson monomials = OrderedJson::array();
    OrderedJson exact = OrderedJson::array();
    OrderedJson norm = OrderedJson::array();
    for (const Monomial& m : monomials_of_degree(n, t)) {
        monomials.push_back(m.to_string(dual));
        exact.push_back(a.form.coeff(m).to_string());
        norm.push_back(normalized.coeff(m).to_string());
    }
    OrderedJson j;
    j["degree"] = t;
    j["dual_vars"] = dual;
    j["monomial_order"] = "graded-lex, descending";
    j["monomials"] = std::move(monomials);
    j["exact"] = std::move(exact);
    j["normalized"] = std::move(norm);
    j["inverse_system_verified"] = apolar.inverse_system_verified();
    return j;
}

inline OrderedJson artinian_json(const ArtinianCertificate& c) {
    OrderedJson j;
    j["verdict"] = c.artinian;
    j["decision_degree"] = c.decision_degree;
    j["quotient_dim"] = c.quotient_dim;
    return j;
}

template <Scalar F>
AnalysisResult analyze_core(const SystemInput<F>& sys, const std::vector<std::string>& vars,
                            OrderedJson input_echo, const AnalyzeOptions& opt) {
    StageTimer timer;
    OrderedJson stages;
    OrderedJson rep;

    const GradedQuotient<F> q(sys);
    stages["quotient_ms"] = timer.lap_ms();

    const int t = q.socle_degree();
    rep["input"] = std::move(input_echo);
    rep["T"] = t;
    const CiCertificate& ci = q.ci_certificate();
    rep["is_ci"]["verdict"] = ci.is_ci;
    rep["is_ci"]["first_failure_degree"] =
        ci.first_failure_degree ? OrderedJson(*ci.first_failure_degree) : OrderedJson(nullptr);
    OrderedJson hilbert = OrderedJson::array();
    for (int d = 0; d <= t; ++d) hilbert.push_back(q.hilbert_function()[static_cast<std::size_t>(d)]);
    rep["hilbert"] = std::move(hilbert);

    if (!ci.is_ci) {
        rep["socle"] = nullptr;
        rep["assoc_form"] = nullptr;
        rep["condition_smooth"] = nullptr;
        rep["condition_veronese"] = nullptr;
        rep["slp"] = nullptr;
        rep["consistency"] = nullptr;
        if (opt.with_timing) {
            OrderedJson timing;
            timing["stages"] = std::move(stages);
            rep["timing"] = std::move(timing);
        } else {
            rep["timing"] = nullptr;
        }
        return AnalysisResult{std::move(rep), 1};
    }

    for (int k : opt.k_list)
        if (k < 0 || 2 * k >= t)
            throw Error("requested SLP degree k = " + std::to_string(k) +
                        " is outside [0, T/2) for T = " + std::to_string(t));

    const SocleData<F> socle = socle_functional(q);
    rep["socle"]["monomial"] = socle.socle_monomial.to_string(vars);
    rep["socle"]["c"] = socle.c.to_string();
    rep["socle"]["omega_of_socle_monomial"] = socle.c.inv().to_string();
    stages["socle_ms"] = timer.lap_ms();

    const AssociatedForm<F> a = associated_form(q, socle);
    const ApolarReport apolar = apolar_annihilator_dims(a, q);
    rep["assoc_form"] = assoc_form_json(a, apolar);
    stages["assoc_form_ms"] = timer.lap_ms();

    const ArtinianCertificate cond1 = condition_smooth_assocform(a);
    rep["condition_smooth"] = artinian_json(cond1);
    stages["condition_smooth_ms"] = timer.lap_ms();

    const VeroneseCertificate<F> cond2 = condition_veronese_empty(q);
    rep["condition_veronese"] = artinian_json(cond2.artinian);
    rep["condition_veronese"]["verdict"] = cond2.empty_intersection;
    rep["condition_veronese"]["witness"] =
        cond2.witness ? OrderedJson(cond2.witness->to_string(vars)) : OrderedJson(nullptr);
    rep["condition_veronese"]["witness_verified"] =
        cond2.witness ? OrderedJson(true) : OrderedJson(nullptr);
    stages["condition_veronese_ms"] = timer.lap_ms();

    OrderedJson slp_list = OrderedJson::array();
    std::optional<bool> slp1_holds;
    for (int k : opt.k_list) {
        const SlpVerdict<F> v =
            slp_witness_search(q, k, opt.trials, Rng::mix(opt.seed, 0x51f0 + static_cast<std::uint64_t>(k)),
                               opt.coeff_bound);
        if (k == 1) slp1_holds = (v.status == SlpStatus::HoldsWithWitness);
        slp_list.push_back(slp_verdict_json(v, vars));
    }
    rep["slp"] = std::move(slp_list);
    stages["slp_ms"] = timer.lap_ms();

    const bool equivalence = cond1.artinian == cond2.empty_intersection;
    OrderedJson consistency;
    consistency["thmA3_equivalence"] = equivalence;
    if (!cond1.artinian)
        consistency["thmSLP1_implication"] = true;  // vacuous
    else if (slp1_holds)
        consistency["thmSLP1_implication"] = *slp1_holds;
    else
        consistency["thmSLP1_implication"] = nullptr;  // k = 1 not requested
    const bool implication_violated = cond1.artinian && slp1_holds && !*slp1_holds;
    rep["consistency"] = std::move(consistency);

    if (opt.with_timing) {
        OrderedJson timing;
        timing["stages"] = std::move(stages);
        rep["timing"] = std::move(timing);
    } else {
        rep["timing"] = nullptr;
    }

    const int exit_code = (!equivalence || implication_violated) ? 2 : 0;
    return AnalysisResult{std::move(rep), exit_code};
}

template <Scalar F>
AnalysisResult analyze_text_impl(const SystemText& text, const AnalyzeOptions& opt) {
    std::vector<Poly<F>> gens;
    gens.reserve(text.entries.size());
    for (const auto& [name, expr] : text.entries)
        gens.push_back(parse_poly<F>(expr, text.vars, opt.field));
    SystemInput<F> sys(std::move(gens), opt.field);

    OrderedJson input;
    input["mode"] = "analyze";
    input["n"] = sys.n;
    input["vars"] = text.vars;
    OrderedJson names = OrderedJson::array();
    OrderedJson printed = OrderedJson::array();
    for (std::size_t i = 0; i < text.entries.size(); ++i) {
        names.push_back(text.entries[i].first);
        printed.push_back(sys.gens[i].to_string(text.vars));
    }
    input["names"] = std::move(names);
    input["generators"] = std::move(printed);
    input["degrees"] = sys.degrees();
    input["field"] = opt.field.to_string();
    input["seed"] = opt.seed;
    input["coeff_bound"] = opt.coeff_bound;
    input["trials"] = opt.trials;
    input["k"] = opt.k_list;
    return analyze_core(sys, text.vars, std::move(input), opt);
}

template <Scalar F>
AnalysisResult analyze_milnor_impl(const std::string& expr, const std::vector<std::string>& vars,
                                   const AnalyzeOptions& opt) {
    const Poly<F> f = parse_poly<F>(expr, vars, opt.field);
    const SystemInput<F> sys = milnor_system(f, opt.field);
    const int d = f.degree();
    const std::size_t n = f.nvars();

    // Jac of the gradient system is the Hessian determinant of f; verified as
    // a polynomial identity against the directly assembled Hessian matrix.
    std::vector<std::vector<Poly<F>>> hessian;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly<F>> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(partial(partial(f, i), j));
        hessian.push_back(std::move(row));
    }
    const int t = sys.socle_degree();
    const bool hess_jac_identity =
        lefschetz::detail::poly_matrix_det(hessian, t) == jacobian_det(sys.gens);

    OrderedJson input;
    input["mode"] = "milnor";
    input["n"] = n;
    input["vars"] = vars;
    input["f"] = f.to_string(vars);
    input["f_degree"] = d;
    input["T_formula_n_times_d_minus_2"] = static_cast<long>(n) * (d - 2);
    input["hess_jac_identity"] = hess_jac_identity;
    OrderedJson printed = OrderedJson::array();
    OrderedJson names = OrderedJson::array();
    for (std::size_t j = 0; j < n; ++j) {
        names.push_back("f" + std::to_string(j + 1));
        printed.push_back(sys.gens[j].to_string(vars));
    }
    input["names"] = std::move(names);
    input["generators"] = std::move(printed);
    input["degrees"] = sys.degrees();
    input["field"] = opt.field.to_string();
    input["seed"] = opt.seed;
    input["coeff_bound"] = opt.coeff_bound;
    input["trials"] = opt.trials;
    input["k"] = opt.k_list;
    return analyze_core(sys, vars, std::move(input), opt);
}

}  // namespace detail

inline AnalysisResult analyze_system(const SystemText& text, const AnalyzeOptions& opt) {
    if (opt.field.mode == FieldConfig::Mode::Prime)
        return detail::analyze_text_impl<Fp>(text, opt);
    return detail::analyze_text_impl<Rational>(text, opt);
}

inline AnalysisResult analyze_milnor(const std::string& expr, const std::vector<std::string>& vars,
                                     const AnalyzeOptions& opt) {
    if (opt.field.mode == FieldConfig::Mode::Prime)
        return detail::analyze_milnor_impl<Fp>(expr, vars, opt);
    return detail::analyze_milnor_impl<Rational>(expr, vars, opt);
}

// ---------------------------------------------------------------------------
// Sweep: random complete intersections of a fixed multidegree.

struct SweepOptions {
    std::size_t n = 3;
    std::vector<int> degrees{2, 2, 2};
    int samples = 100;
    FieldConfig field = FieldConfig::prime(kDefaultScreeningPrime);
    std::uint64_t seed = 42;
    int coeff_bound = 10;
    int trials = 20;
    int jobs = 1;
    bool with_timing = true;
    long max_draws_per_sample = 10000;
};

struct SweepStats {
    int samples = 0;
    long total_draws = 0;
    int cond1_true = 0;
    int cond2_true = 0;
    int slp1_holds = 0;
    int equivalence_violations = 0;
    int implication_violations = 0;
    int escalations = 0;
};

struct SweepResult {
    OrderedJson report;
    SweepStats stats;
    int exit_code = 0;  // 2 on any equivalence/implication violation
};

namespace detail {

struct SweepSampleOutcome {
    std::uint64_t seed = 0;
    long draws = 0;  // total draws including the accepted one
    bool cond1 = false;
    bool cond2 = false;
    bool slp1_holds = false;
    std::string slp1_status;
    int slp_trials_used = 0;
    bool escalated = false;
};

// Raw integer coefficients of one accepted draw, so a screening sample can be
// lifted verbatim to the rationals for re-verification.
using RawCoeffs = std::vector<std::vector<std::int64_t>>;

template <Scalar F>
SystemInput<F> build_from_raw(const RawCoeffs& raw, const SweepOptions& opt,
                              const FieldConfig& cfg) {
    std::vector<Poly<F>> gens;
    for (std::size_t j = 0; j < opt.degrees.size(); ++j) {
        const std::vector<Monomial> basis = monomials_of_degree(opt.n, opt.degrees[j]);
        Poly<F> g(VarSpace::Primal, opt.n, opt.degrees[j]);
        for (std::size_t i = 0; i < basis.size(); ++i)
            g.add_term(basis[i], F::from_int(cfg, raw[j][i]));
        gens.push_back(std::move(g));
    }
    return SystemInput<F>(std::move(gens), cfg);
}

template <Scalar F>
struct SamplePipelineOut {
    bool cond1 = false;
    bool cond2 = false;
    SlpVerdict<F> slp;
};

template <Scalar F>
SamplePipelineOut<F> run_sample_pipeline(const GradedQuotient<F>& q, const SweepOptions& opt,
                                         std::uint64_t slp_seed) {
    SamplePipelineOut<F> out;
    const SocleData<F> socle = socle_functional(q);
    const AssociatedForm<F> a = associated_form(q, socle);
    out.cond1 = condition_smooth_assocform(a).artinian;
    out.cond2 = condition_veronese_empty(q).empty_intersection;
    out.slp = slp_witness_search(q, 1, opt.trials, slp_seed, opt.coeff_bound);
    return out;
}

inline SweepSampleOutcome run_sweep_sample(const SweepOptions& opt, int index) {
    SweepSampleOutcome out;
    out.seed = Rng::mix(opt.seed, static_cast<std::uint64_t>(index));
    Rng rng(out.seed);
    const bool screening = opt.field.mode == FieldConfig::Mode::Prime;

    // Rejection-sample until the draw certifies as a complete intersection in
    // the sampling field. A prime-field CI certificate lifts: full rank mod p
    // forces full rank over the rationals, so the lift is CI as well.
    RawCoeffs raw(opt.degrees.size());
    std::optional<GradedQuotient<Fp>> q_p;
    std::optional<GradedQuotient<Rational>> q_q;
    for (;;) {
        if (++out.draws > opt.max_draws_per_sample)
            throw Error("sweep: no CI draw accepted after " +
                        std::to_string(opt.max_draws_per_sample) + " attempts");
        for (std::size_t j = 0; j < opt.degrees.size(); ++j) {
            const std::size_t count = dim_degree_piece(opt.n, opt.degrees[j]);
            raw[j].assign(count, 0);
            bool nonzero = false;
            do {
                for (std::size_t i = 0; i < count; ++i) {
                    raw[j][i] = screening
                                    ? static_cast<std::int64_t>(rng.below(opt.field.p))
                                    : rng.int_in(-opt.coeff_bound, opt.coeff_bound);
                    if (raw[j][i] != 0) nonzero = true;
                }
            } while (!nonzero);
        }
        if (screening) {
            GradedQuotient<Fp> q(build_from_raw<Fp>(raw, opt, opt.field));
            if (!q.certified_ci()) continue;
            q_p.emplace(std::move(q));
        } else {
            GradedQuotient<Rational> q(build_from_raw<Rational>(raw, opt, opt.field));
            if (!q.certified_ci()) continue;
            q_q.emplace(std::move(q));
        }
        break;
    }

    const std::uint64_t slp_seed = Rng::mix(out.seed, 0x51f);
    bool need_escalation = false;
    if (screening) {
        try {
            const SamplePipelineOut<Fp> r = run_sample_pipeline(*q_p, opt, slp_seed);
            out.cond1 = r.cond1;
            out.cond2 = r.cond2;
            out.slp1_holds = r.slp.status == SlpStatus::HoldsWithWitness;
            out.slp1_status = to_string(r.slp.status);
            out.slp_trials_used = r.slp.trials_used;
            // A negative certificate mod p does not certify a negative in
            // characteristic zero; re-verify any negative over the rationals.
            need_escalation = !out.cond1 || !out.cond2 || !out.slp1_holds;
        } catch (const InvariantViolation&) {
            // e.g. the socle scalar vanished mod p; decide over the rationals.
            need_escalation = true;
        }
    }
    if (screening && need_escalation) {
        out.escalated = true;
        GradedQuotient<Rational> q(build_from_raw<Rational>(raw, opt, FieldConfig::rationals()));
        if (!q.certified_ci())
            throw InvariantViolation("prime-field CI certificate failed to lift");
        const SamplePipelineOut<Rational> r = run_sample_pipeline(q, opt, slp_seed);
        out.cond1 = r.cond1;
        out.cond2 = r.cond2;
        out.slp1_holds = r.slp.status == SlpStatus::HoldsWithWitness;
        out.slp1_status = to_string(r.slp.status);
        out.slp_trials_used = r.slp.trials_used;
    }
    if (!screening) {
        const SamplePipelineOut<Rational> r = run_sample_pipeline(*q_q, opt, slp_seed);
        out.cond1 = r.cond1;
        out.cond2 = r.cond2;
        out.slp1_holds = r.slp.status == SlpStatus::HoldsWithWitness;
        out.slp1_status = to_string(r.slp.status);
        out.slp_trials_used = r.slp.trials_used;
    }
    return out;
}

}  // namespace detail

inline SweepResult run_sweep(const SweepOptions& opt) {
    if (opt.samples < 0) throw Error("sweep: negative sample count");
    MultiDegree md(opt.n, opt.degrees);  // validates shape
    detail::StageTimer timer;

    std::vector<detail::SweepSampleOutcome> outcomes(static_cast<std::size_t>(opt.samples));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(opt.samples));
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || opt.samples <= 1) {
        for (int i = 0; i < opt.samples; ++i) outcomes[static_cast<std::size_t>(i)] = detail::run_sweep_sample(opt, i);
    } else {
        std::atomic<int> next{0};
        auto work = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= opt.samples) return;
                try {
                    outcomes[static_cast<std::size_t>(i)] = detail::run_sweep_sample(opt, i);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min(jobs, opt.samples); ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SweepStats stats;
    stats.samples = opt.samples;
    OrderedJson lines = OrderedJson::array();
    for (int i = 0; i < opt.samples; ++i) {
        const auto& o = outcomes[static_cast<std::size_t>(i)];
        stats.total_draws += o.draws;
        if (o.cond1) ++stats.cond1_true;
        if (o.cond2) ++stats.cond2_true;
        if (o.slp1_holds) ++stats.slp1_holds;
        if (o.cond1 != o.cond2) ++stats.equivalence_violations;
        if (o.cond1 && !o.slp1_holds) ++stats.implication_violations;
        if (o.escalated) ++stats.escalations;
        std::ostringstream line;
        line << "sample " << i << " seed=" << o.seed << " draws=" << o.draws
             << " cond1=" << (o.cond1 ? "T" : "F") << " cond2=" << (o.cond2 ? "T" : "F")
             << " slp1=" << o.slp1_status << "(" << o.slp_trials_used << ")"
             << " escalated=" << (o.escalated ? "T" : "F");
        lines.push_back(line.str());
    }

    OrderedJson rep;
    rep["multidegree"] = opt.degrees;
    rep["n"] = opt.n;
    rep["samples"] = opt.samples;
    rep["field"] = opt.field.to_string();
    rep["seed"] = opt.seed;
    rep["coeff_bound"] = opt.coeff_bound;
    rep["trials"] = opt.trials;
    rep["outcomes"] = std::move(lines);
    rep["ci_rate"] = stats.total_draws == 0
                         ? 0.0
                         : static_cast<double>(stats.samples) / static_cast<double>(stats.total_draws);
    rep["condition1_rate"] =
        opt.samples == 0 ? 0.0 : static_cast<double>(stats.cond1_true) / opt.samples;
    rep["condition2_rate"] =
        opt.samples == 0 ? 0.0 : static_cast<double>(stats.cond2_true) / opt.samples;
    rep["slp1_rate"] =
        opt.samples == 0 ? 0.0 : static_cast<double>(stats.slp1_holds) / opt.samples;
    rep["equivalence_violations"] = stats.equivalence_violations;
    rep["implication_violations"] = stats.implication_violations;
    rep["escalations"] = stats.escalations;
    if (opt.with_timing)
        rep["timing"] = OrderedJson{{"total_ms", timer.lap_ms()}};
    else
        rep["timing"] = nullptr;

    const int exit_code =
        (stats.equivalence_violations > 0 || stats.implication_violations > 0) ? 2 : 0;
    return SweepResult{std::move(rep), stats, exit_code};
}

// ---------------------------------------------------------------------------
// ACI batch: sampled almost-complete-intersection fixtures.

struct AciOptions {
    std::size_t n = 3;
    std::vector<int> degrees{2, 2, 2};
    int samples = 50;
    FieldConfig field = FieldConfig::rationals();
    std::uint64_t seed = 1;
    int coeff_bound = 50;
    int line_trials = 100;
    bool with_timing = true;
};

struct AciStats {
    int samples = 0;
    int claims_passed = 0;
    long line_checks = 0;
    long escape_failures = 0;
    long veronese_avoidance_failures = 0;  // sampled ell with ell^(T-1) in J(g)_(T-1)
    int claim3_exact_on_passing = 0;       // passing samples with dim (S/J)_(T-1) == n
};

struct AciResult {
    OrderedJson report;
    AciStats stats;
    int exit_code = 0;
};

template <Scalar F>
AciResult run_aci_impl(const AciOptions& opt) {
    MultiDegree md(opt.n, opt.degrees);
    detail::StageTimer timer;
    AciStats stats;
    stats.samples = opt.samples;
    OrderedJson fixtures = OrderedJson::array();

    for (int i = 0; i < opt.samples; ++i) {
        const std::uint64_t seed = Rng::mix(opt.seed, static_cast<std::uint64_t>(i));
        const AciFixture<F> fx = sample_aci<F>(md, seed, opt.coeff_bound, opt.field);
        const AciClaimsReport rep = verify_aci_claims(fx);
        if (rep.all_ok()) {
            ++stats.claims_passed;
            if (rep.claim3_ok) ++stats.claim3_exact_on_passing;
        }

        // Pure-power escape regression plus the avoidance connection:
        // no sampled line may have its (T-1)-st power inside J(g)_(T-1).
        const DegreePiece<F> top =
            ideal_degree_piece(std::span<const Poly<F>>(fx.gens), fx.n, rep.T - 1);
        Rng lrng(Rng::mix(seed, 0xC1));
        long escape_fail = 0, avoid_fail = 0;
        for (int trial = 0; trial < opt.line_trials; ++trial) {
            const Poly<F> ell = random_linear_form<F>(lrng, opt.field, fx.n, opt.coeff_bound);
            ++stats.line_checks;
            if (!offdiag_escape_check(ell, rep.T)) ++escape_fail;
            if (top.contains(veronese_power(ell, rep.T - 1))) ++avoid_fail;
        }
        stats.escape_failures += escape_fail;
        stats.veronese_avoidance_failures += avoid_fail;

        OrderedJson f;
        f["index"] = i;
        f["seed"] = seed;
        f["claims"] = OrderedJson{{"containment", rep.containment_ok},
                                  {"claim1", rep.claim1_ok},
                                  {"claim2", rep.n1_zero && rep.n_tminus1_zero},
                                  {"claim3", rep.claim3_ok}};
        f["dim_j"] = rep.dim_j;
        f["dim_k"] = rep.dim_k;
        f["quotient_dim_at_T_minus_1"] = rep.quotient_dim_at_tminus1;
        f["failed_claim"] = detail::json_or_null(rep.failed_claim);
        f["escape_failures"] = escape_fail;
        f["veronese_avoidance_failures"] = avoid_fail;
        fixtures.push_back(std::move(f));
    }

    OrderedJson rep;
    rep["multidegree"] = opt.degrees;
    rep["n"] = opt.n;
    rep["samples"] = opt.samples;
    rep["field"] = opt.field.to_string();
    rep["seed"] = opt.seed;
    rep["coeff_bound"] = opt.coeff_bound;
    rep["line_trials"] = opt.line_trials;
    rep["fixtures"] = std::move(fixtures);
    rep["claims_pass_rate"] =
        opt.samples == 0 ? 0.0 : static_cast<double>(stats.claims_passed) / opt.samples;
    rep["escape_failures"] = stats.escape_failures;
    rep["veronese_avoidance_failures"] = stats.veronese_avoidance_failures;
    if (opt.with_timing)
        rep["timing"] = OrderedJson{{"total_ms", timer.lap_ms()}};
    else
        rep["timing"] = nullptr;
    return AciResult{std::move(rep), stats, 0};
}

inline AciResult run_aci(const AciOptions& opt) {
    if (opt.field.mode == FieldConfig::Mode::Prime) return run_aci_impl<Fp>(opt);
    return run_aci_impl<Rational>(opt);
}

}  // namespace lefschetz
