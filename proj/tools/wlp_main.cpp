// Command line front end.  Every subcommand prints either a human-readable
// report or the same content as a single-line JSON document.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlp/classify.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/linsys.hpp"
#include "wlp/oracle.hpp"
#include "wlp/reproduce.hpp"

using nlohmann::json;
using namespace wlp;

namespace {

json int_json(const Integer& v) {
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::string show_system(const FatPointSystem& s) {
    std::string out = "L_" + std::to_string(s.proj_dim) + "(" + std::to_string(s.degree) + "; ";
    if (s.mults.empty()) out += "-";
    for (size_t i = 0; i < s.mults.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.mults[i]);
    return out + ")";
}

json system_json(const FatPointSystem& s) {
    return {{"pdim", s.proj_dim}, {"degree", s.degree}, {"mults", s.mults}};
}

const char* peel_kind(PeelStep::Kind k) {
    switch (k) {
        case PeelStep::Kind::Conic5: return "peel-conic";
        case PeelStep::Kind::Line2: return "peel-line";
        default: return "cone-point";
    }
}

json trace_json(const std::vector<ReductionStep>& trace) {
    json arr = json::array();
    for (const ReductionStep& st : trace) {
        if (const CremonaStep* c = std::get_if<CremonaStep>(&st))
            arr.push_back({{"step", "cremona"},
                           {"shift", c->shift},
                           {"touched", c->touched},
                           {"before", system_json(c->before)},
                           {"after", system_json(c->after)}});
        else if (const PeelStep* p = std::get_if<PeelStep>(&st))
            arr.push_back({{"step", peel_kind(p->kind)},
                           {"multiplicity", p->multiplicity_removed},
                           {"before", system_json(p->before)},
                           {"after", system_json(p->after)}});
    }
    return arr;
}

void print_trace_human(const std::vector<ReductionStep>& trace) {
    for (const ReductionStep& st : trace) {
        if (const CremonaStep* c = std::get_if<CremonaStep>(&st))
            std::cout << "  cremona shift " << c->shift << ": " << show_system(c->before)
                      << " -> " << show_system(c->after) << "\n";
        else if (const PeelStep* p = std::get_if<PeelStep>(&st))
            std::cout << "  " << peel_kind(p->kind) << " mult " << p->multiplicity_removed
                      << ": " << show_system(p->before) << " -> " << show_system(p->after)
                      << "\n";
    }
}

json certificate_json(const FailureCertificate& c) {
    return {{"degree", c.degree},          {"actual", int_json(c.actual)},
            {"expected", int_json(c.expected)}, {"gap", int_json(c.gap)},
            {"via", c.via},                {"oracle_used", c.oracle_used}};
}

void print_certificate_human(const FailureCertificate& c) {
    std::cout << "certificate: degree " << c.degree << ", actual " << c.actual << ", expected "
              << c.expected << ", gap " << c.gap << ", via " << c.via
              << (c.oracle_used ? " (rank oracle)" : " (symbolic)") << "\n";
}

json report_json(const RankReport& r) {
    return {{"degree", r.degree},
            {"dim_rj", r.dim_rj},
            {"dim_rj_minus", r.dim_rj_minus},
            {"dim_quotient_ell", r.dim_quotient_ell},
            {"expected", r.expected},
            {"maximal_rank", r.maximal_rank},
            {"power_k", r.power_k},
            {"prime", r.prime},
            {"attempts", r.attempts}};
}

struct GlobalOpts {
    unsigned long long prime = kDefaultPrime;
    unsigned long long seed = 0;
    int retries = 3;
    std::string format = "human";

    PrimeFieldConfig field() const { return PrimeFieldConfig{prime, seed, retries}; }
    bool structured() const { return format != "human"; }
};

json base_doc(const GlobalOpts& g, const std::string& command, json inputs, long long elapsed) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"prime", g.prime},
            {"seed", g.seed},     {"retries", g.retries},        {"elapsed_ms", elapsed}};
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

void print_field_human(const GlobalOpts& g, long long elapsed) {
    std::cout << "field: prime=" << g.prime << " seed=" << g.seed << " retries=" << g.retries
              << " elapsed_ms=" << elapsed << "\n";
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::string join_ll(const std::vector<long long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// "4..8" or "4"
std::pair<long long, long long> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const long long v = std::stoll(s);
        return {v, v};
    }
    const long long lo = std::stoll(s.substr(0, pos));
    const long long hi = std::stoll(s.substr(pos + 2));
    if (lo > hi) throw std::invalid_argument("range: expected lo..hi with lo <= hi");
    return {lo, hi};
}

int run_classify(const GlobalOpts& g, int vars, const std::vector<long long>& powers,
                 bool no_oracle, bool assert_holds, bool assert_fails) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExponentConfig config(vars, powers);
    ClassifyOptions opts;
    if (!no_oracle) opts.fallback = make_quotient_oracle(g.field());
    const WlpVerdict v = classify(config, opts);
    const long long elapsed = ms_since(t0);

    if (g.structured()) {
        json doc = base_doc(g, "classify", {{"vars", vars}, {"powers", powers}}, elapsed);
        json verdict = {{"status", to_string(v.status)},
                        {"rule", v.theorem},
                        {"degree_ambiguous", v.degree_ambiguous}};
        if (v.failure_degree) verdict["failure_degree"] = *v.failure_degree;
        if (v.mode) verdict["mode"] = to_string(*v.mode);
        if (!v.note.empty()) verdict["note"] = v.note;
        doc["verdict"] = verdict;
        if (v.certificate) doc["certificate"] = certificate_json(*v.certificate);
        emit(doc);
    } else {
        std::cout << "config: " << vars << " variables, powers " << join_ll(powers) << "\n";
        std::cout << "verdict: " << to_string(v.status) << "\n";
        std::cout << "rule: " << v.theorem << "\n";
        if (v.failure_degree)
            std::cout << "failure degree: " << *v.failure_degree
                      << (v.degree_ambiguous ? " (may not be the only one)" : "") << "\n";
        if (v.mode) std::cout << "mode: " << to_string(*v.mode) << "\n";
        if (v.certificate) print_certificate_human(*v.certificate);
        if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
        print_field_human(g, elapsed);
    }
    if (assert_holds) return v.status == WlpStatus::Holds ? 0 : 1;
    if (assert_fails) return v.status == WlpStatus::Fails ? 0 : 1;
    return 0;
}

int run_hilbert(const GlobalOpts& g, int vars, const std::vector<long long>& powers,
                long long degree, bool has_degree) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExponentConfig config(vars, powers);
    const bool complete = static_cast<int>(powers.size()) == vars;
    const HilbertFunction h = complete ? ci_hilbert(config) : aci_hilbert(config);
    const long long elapsed = ms_since(t0);

    json values = json::array();
    for (const Integer& v : h.values) values.push_back(int_json(v));
    if (g.structured()) {
        json doc = base_doc(g, "hilbert", {{"vars", vars}, {"powers", powers}}, elapsed);
        doc["values"] = values;
        doc["socle_degree"] = h.socle_degree;
        if (has_degree) {
            doc["degree"] = degree;
            doc["value"] = int_json(h.value(degree));
            if (!complete) {
                const FirstDifference fd = expected_first_difference(config, degree);
                doc["first_difference"] = {{"value", int_json(fd.value)},
                                           {"simplified_applicable", fd.simplified_applicable}};
            }
        }
        emit(doc);
    } else {
        std::cout << (complete ? "complete intersection" : "almost complete intersection")
                  << ", powers " << join_ll(powers) << "\n";
        std::cout << "hilbert:";
        for (const Integer& v : h.values) std::cout << " " << v;
        std::cout << "\nsocle degree: " << h.socle_degree << "\n";
        if (has_degree) {
            std::cout << "h(" << degree << ") = " << h.value(degree) << "\n";
            if (!complete) {
                const FirstDifference fd = expected_first_difference(config, degree);
                std::cout << "expected first difference at " << degree << ": " << fd.value
                          << " (simplified form applies: "
                          << (fd.simplified_applicable ? "yes" : "no") << ")\n";
            }
        }
        print_field_human(g, elapsed);
    }
    return 0;
}

LinSysResult run_forced_method(const FatPointSystem& start, const std::string& method,
                               const PrimeFieldConfig& field) {
    if (method == "auto") return dim_linear_system(start);

    LinSysResult res;
    res.terminal = start;
    res.method = method;
    if (method == "bruteforce") {
        res.dimension = fat_point_dim_bruteforce(start, field);
        return res;
    }
    if (method == "dl") {
        res.dimension = dim_dl_p3(start);
        return res;
    }
    if (method == "nef") {
        res.dimension = dim_p2_nef(start);
        return res;
    }
    if (method == "cremona") {
        FatPointSystem s = start;
        while (s.degree >= 0 && !is_standard_form(s) &&
               s.mults.size() >= static_cast<size_t>(s.proj_dim) + 1) {
            const CremonaStep st = cremona_transform(s);
            s = st.after;
            res.trace.emplace_back(st);
        }
        res.terminal = s;
    } else if (method == "peel") {
        if (start.proj_dim != 2) throw not_applicable("peel: system must live in the plane");
        const PeelResult pr = peel_base_locus_p2(start);
        for (const PeelStep& st : pr.steps) res.trace.emplace_back(st);
        res.terminal = pr.residual;
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    // report a dimension only when the residual is immediate
    const FatPointSystem& t = res.terminal;
    if (t.degree < 0 || (!t.mults.empty() && t.mults.front() > t.degree))
        res.dimension = 0;
    else if (t.mults.empty())
        res.dimension = binomial_or_zero(t.degree + t.proj_dim, t.proj_dim);
    return res;
}

int run_linsys(const GlobalOpts& g, int pdim, long long deg, const std::vector<long long>& mults,
               const std::string& method) {
    const auto t0 = std::chrono::steady_clock::now();
    const FatPointSystem start(pdim, deg, mults);
    const LinSysResult res = run_forced_method(start, method, g.field());
    const long long elapsed = ms_since(t0);

    if (g.structured()) {
        json doc = base_doc(
            g, "linsys",
            {{"pdim", pdim}, {"deg", deg}, {"mults", mults}, {"method", method}}, elapsed);
        doc["dimension"] = res.dimension ? int_json(*res.dimension) : json(nullptr);
        doc["resolved_by"] = res.method;
        doc["terminal"] = system_json(res.terminal);
        doc["trace"] = trace_json(res.trace);
        emit(doc);
    } else {
        std::cout << "system: " << show_system(start) << "\n";
        print_trace_human(res.trace);
        if (res.dimension)
            std::cout << "dimension: " << *res.dimension << " (method: " << res.method << ")\n";
        else
            std::cout << "dimension: unknown (method: " << res.method << "), terminal "
                      << show_system(res.terminal) << "\n";
        print_field_human(g, elapsed);
    }
    return res.dimension ? 0 : 3;
}

int run_oracle(const GlobalOpts& g, int vars, const std::vector<long long>& powers,
               long long power_k, long long degree, bool has_degree) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExponentConfig config(vars, powers);
    std::vector<RankReport> reports;
    if (has_degree)
        reports.push_back(rank_report_at(config, degree, g.field(), power_k));
    else
        reports = wlp_check(config, g.field(), power_k);
    const bool holds = wlp_holds(reports);
    const auto fails = failing_degrees(reports);
    const long long elapsed = ms_since(t0);

    if (g.structured()) {
        json inputs = {{"vars", vars}, {"powers", powers}, {"power_k", power_k}};
        if (has_degree) inputs["degree"] = degree;
        json doc = base_doc(g, "oracle", inputs, elapsed);
        doc["reports"] = json::array();
        for (const RankReport& r : reports) doc["reports"].push_back(report_json(r));
        doc["maximal_rank_everywhere"] = holds;
        doc["failing_degrees"] = fails;
        emit(doc);
    } else {
        std::cout << "config: " << vars << " variables, powers " << join_ll(powers)
                  << ", power_k " << power_k << "\n";
        std::cout << "degree dim_rj dim_prev dim_quot expected maximal prime attempts\n";
        for (const RankReport& r : reports)
            std::printf("%6lld %6lld %8lld %8lld %8lld %7s %10llu %8d\n", r.degree, r.dim_rj,
                        r.dim_rj_minus, r.dim_quotient_ell, r.expected,
                        r.maximal_rank ? "yes" : "NO", r.prime, r.attempts);
        if (holds)
            std::cout << "maximal rank at every tested degree\n";
        else
            std::cout << "rank drops at degrees: " << join_ll(fails) << "\n";
        print_field_human(g, elapsed);
    }
    return 0;
}

int run_certificate(const GlobalOpts& g, int vars, const std::vector<long long>& powers,
                    long long degree, bool no_oracle) {
    const auto t0 = std::chrono::steady_clock::now();
    const ExponentConfig config(vars, powers);
    DimOracle fallback;
    if (!no_oracle) fallback = make_quotient_oracle(g.field());
    const FailureCertificate cert = failure_certificate(config, degree, fallback);
    const long long elapsed = ms_since(t0);

    if (g.structured()) {
        json doc = base_doc(g, "certificate",
                            {{"vars", vars}, {"powers", powers}, {"degree", degree}}, elapsed);
        doc["certificate"] = certificate_json(cert);
        emit(doc);
    } else {
        std::cout << "config: " << vars << " variables, powers " << join_ll(powers) << "\n";
        print_certificate_human(cert);
        std::cout << "maximal rank at degree " << degree << ": "
                  << (cert.gap >= 1 ? "NO" : "yes") << "\n";
        print_field_human(g, elapsed);
    }
    return 0;
}

int run_reproduce(const GlobalOpts& g, const std::string& target, const std::string& d_range,
                  const std::string& n_range) {
    const auto t0 = std::chrono::steady_clock::now();
    ReproduceOptions opt;
    if (!d_range.empty()) std::tie(opt.d_lo, opt.d_hi) = parse_range(d_range);
    if (!n_range.empty()) std::tie(opt.n_lo, opt.n_hi) = parse_range(n_range);

    std::vector<std::string> targets;
    if (target == "all")
        targets = reproduce_target_names();
    else
        targets.push_back(target);

    std::vector<ReproReport> reports;
    bool all_pass = true;
    for (const std::string& t : targets) {
        reports.push_back(run_reproduce_target(t, g.field(), opt));
        all_pass = all_pass && reports.back().pass;
    }
    const long long elapsed = ms_since(t0);

    if (g.structured()) {
        json doc = base_doc(g, "reproduce",
                            {{"target", target}, {"d", d_range}, {"n", n_range}}, elapsed);
        doc["targets"] = json::array();
        for (const ReproReport& r : reports) {
            json lines = json::array();
            for (const ReproLine& l : r.lines) lines.push_back({{"pass", l.pass}, {"text", l.text}});
            doc["targets"].push_back({{"target", r.target}, {"pass", r.pass}, {"lines", lines}});
        }
        doc["pass"] = all_pass;
        emit(doc);
    } else {
        for (const ReproReport& r : reports) {
            std::cout << "== " << r.target << " ==\n";
            for (const ReproLine& l : r.lines)
                std::cout << (l.pass ? "ok   " : "FAIL ") << l.text << "\n";
            std::cout << "target " << r.target << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
        }
        print_field_human(g, elapsed);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal rank checks for ideals of powers of general linear forms"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--prime", g.prime, "field characteristic")->envname("WLP_PRIME");
    app.add_option("--seed", g.seed, "sampling seed")->envname("WLP_SEED");
    app.add_option("--retries", g.retries, "rank-test attempts before reporting a drop")
        ->envname("WLP_RETRIES");
    app.add_option("--format", g.format, "human | json")
        ->check(CLI::IsMember({"human", "json", "structured"}));

    int vars = 0;
    std::vector<long long> powers, mults;
    long long degree = 0, power_k = 1, deg = 0;
    int pdim = 2;
    bool no_oracle = false, assert_holds = false, assert_fails = false;
    std::string method = "auto", target, d_range, n_range;

    CLI::App* c_classify = app.add_subcommand("classify", "decide WLP from the exponent list");
    c_classify->add_option("--vars", vars)->required();
    c_classify->add_option("--powers", powers)->required()->delimiter(',');
    c_classify->add_flag("--no-oracle", no_oracle, "never fall back to the rank oracle");
    c_classify->add_flag("--assert-holds", assert_holds);
    c_classify->add_flag("--assert-fails", assert_fails);

    CLI::App* c_hilbert = app.add_subcommand("hilbert", "Hilbert function of the quotient");
    c_hilbert->add_option("--vars", vars)->required();
    c_hilbert->add_option("--powers", powers)->required()->delimiter(',');
    CLI::Option* h_deg = c_hilbert->add_option("--degree", degree);

    CLI::App* c_linsys = app.add_subcommand("linsys", "fat point linear system dimension");
    c_linsys->add_option("--pdim", pdim)->required();
    c_linsys->add_option("--deg", deg)->required();
    c_linsys->add_option("--mults", mults)->required()->delimiter(',');
    c_linsys->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "cremona", "peel", "dl", "nef", "bruteforce"}));

    CLI::App* c_oracle = app.add_subcommand("oracle", "finite field rank sweep");
    c_oracle->add_option("--vars", vars)->required();
    c_oracle->add_option("--powers", powers)->required()->delimiter(',');
    c_oracle->add_option("--power-k", power_k);
    CLI::Option* o_deg = c_oracle->add_option("--degree", degree);

    CLI::App* c_cert = app.add_subcommand("certificate", "failure witness at one degree");
    c_cert->add_option("--vars", vars)->required();
    c_cert->add_option("--powers", powers)->required()->delimiter(',');
    c_cert->add_option("--degree", degree)->required();
    c_cert->add_flag("--no-oracle", no_oracle);

    CLI::App* c_repro = app.add_subcommand("reproduce", "replay a documented computation");
    c_repro->add_option("target", target, "target name or 'all'")->required();
    c_repro->add_option("--d", d_range, "degree range lo..hi");
    c_repro->add_option("--n", n_range, "variable-pair range lo..hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        // reject a junk modulus up front; symbolic paths never touch the field otherwise
        (void)PrimeField(g.prime);
        if (*c_classify)
            return run_classify(g, vars, powers, no_oracle, assert_holds, assert_fails);
        if (*c_hilbert) return run_hilbert(g, vars, powers, degree, h_deg->count() > 0);
        if (*c_linsys) return run_linsys(g, pdim, deg, mults, method);
        if (*c_oracle) return run_oracle(g, vars, powers, power_k, degree, o_deg->count() > 0);
        if (*c_cert) return run_certificate(g, vars, powers, degree, no_oracle);
        if (*c_repro) return run_reproduce(g, target, d_range, n_range);
    } catch (const no_exact_method& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const degenerate_sample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
