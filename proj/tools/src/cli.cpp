#include "ajforge_cli/cli.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "json_io.hpp"

namespace ajforge::cli {

namespace {

constexpr const char *kSchema = "aj-forge/1";
constexpr unsigned kDefaultCap = 64;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig
{
    std::string command;
    std::string field = "Q";
    std::optional<unsigned> s;
    std::optional<unsigned> precision;
    std::string generator;
    std::optional<unsigned> l;
    std::string c1 = "1";
    std::optional<std::string> c_lp1;
    std::optional<std::string> tail;
    std::optional<std::string> seeds;
    std::optional<std::string> free;
    std::string series;
    std::string method = "full";
    std::string output = "text";
    std::size_t samples = 100;
    std::string rng_seed = "0xA17";
    bool evidence = false;
    unsigned n = 0;
    unsigned i = 0;
    std::string family = "U";
};

unsigned precision_cap()
{
    const char *env = std::getenv("AJ_FORGE_PRECISION_CAP");
    if (!env || !*env)
        return kDefaultCap;
    try {
        return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception &) {
        throw UsageError("AJ_FORGE_PRECISION_CAP is not a number");
    }
}

void check_cap(unsigned value, const char *what)
{
    const unsigned cap = precision_cap();
    if (value > cap)
        throw UsageError(std::string(what) + " " + std::to_string(value) + " exceeds AJ_FORGE_PRECISION_CAP=" +
                         std::to_string(cap));
}

Truncation truncation_of(const JobConfig &cfg)
{
    if (cfg.s && cfg.precision)
        throw UsageError("give either --s or --precision, not both");
    if (!cfg.s && !cfg.precision)
        throw UsageError("a truncation is required: --s <order> or --precision <N>");
    if (cfg.s) {
        check_cap(*cfg.s, "--s");
        return Truncation::finite(*cfg.s);
    }
    check_cap(*cfg.precision, "--precision");
    return Truncation::infinite(*cfg.precision);
}

std::uint64_t rng_seed_of(const JobConfig &cfg)
{
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(cfg.rng_seed, &used, 0);
        if (used != cfg.rng_seed.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw UsageError("--rng-seed must be an integer, got '" + cfg.rng_seed + "'");
    }
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    return parts;
}

// Scalar parsing and sampling for one coefficient field.
struct RationalField
{
    using Scalar = Rational;
    Rational like{0};

    std::string name() const { return "Q"; }
    Rational scalar(const std::string &text) const { return Rational::parse(text); }
    Series<Rational> series(const std::string &text, Truncation t) const { return parse_series(text, t); }
    Rational random(std::mt19937_64 &rng) const
    {
        std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
        return Rational(num(rng), den(rng));
    }
};

struct CyclotomicField
{
    using Scalar = CyclotomicElement;
    CyclotomicElement like;

    std::string name() const { return "cyclotomic:" + std::to_string(like.modulus()); }
    CyclotomicElement scalar(const std::string &text) const { return parse_cyclotomic(text, like.modulus()); }
    Series<CyclotomicElement> series(const std::string &text, Truncation t) const
    {
        return parse_series(text, t, like);
    }
    CyclotomicElement random(std::mt19937_64 &rng) const
    {
        std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
        std::vector<Rational> coords;
        for (unsigned k = 0; k < like.context().degree; ++k)
            coords.emplace_back(num(rng), den(rng));
        return CyclotomicElement(like.modulus(), std::move(coords));
    }
};

template <class F>
std::map<unsigned, typename F::Scalar> index_map(const F &field, const std::optional<std::string> &text,
                                                 const char *flag)
{
    std::map<unsigned, typename F::Scalar> out;
    if (!text)
        return out;
    for (const std::string &item : split(*text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError(std::string(flag) + " entries look like j=value, got '" + item + "'");
        unsigned j = 0;
        try {
            j = static_cast<unsigned>(std::stoul(item.substr(0, eq)));
        } catch (const std::exception &) {
            throw UsageError(std::string(flag) + " index is not a number in '" + item + "'");
        }
        out[j] = field.scalar(item.substr(eq + 1));
    }
    return out;
}

// Output sink: text lines or one JSON document.
class Report
{
public:
    Report(const JobConfig &cfg, std::ostream &out) : json_(cfg.output == "json"), out_(out)
    {
        doc_["schema"] = kSchema;
        doc_["command"] = cfg.command;
    }

    json &doc() { return doc_; }
    void line(const std::string &label, const std::string &value)
    {
        if (!json_)
            out_ << label << ": " << value << "\n";
    }
    void text(const std::string &s)
    {
        if (!json_)
            out_ << s << "\n";
    }
    void finish()
    {
        if (json_)
            out_ << doc_.dump(2) << "\n";
    }

private:
    bool json_;
    std::ostream &out_;
    json doc_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class F>
int cmd_normalize(const JobConfig &cfg, const F &field, Report &rep)
{
    const Truncation t = truncation_of(cfg);
    const auto [gen, lead] = normalize_generator(field.series(cfg.generator, t));
    const auto nf = normal_form(gen, index_map(field, cfg.free, "--free"));
    const auto conj = conjugate_generator(gen.series(), nf.T);
    const auto target = normal_generator(gen.l(), nf.delta, t);
    const bool ok = conj == target;

    auto &d = rep.doc();
    d["field"] = field.name();
    d["generator"] = to_json(gen.series());
    d["leading"] = to_json(lead);
    d["l"] = gen.l();
    d["delta"] = to_json(nf.delta);
    d["T"] = to_json(nf.T.series());
    d["normal_generator"] = to_json(target);
    d["free_choices"] = to_json(nf.free_choices);
    d["conjugation_check"] = ok ? "holds" : "fails";

    rep.line("generator", format_series(gen.series()));
    if (!(lead == one_like(lead)))
        rep.line("leading", format_scalar(lead));
    rep.line("l", std::to_string(gen.l()));
    rep.line("delta", format_scalar(nf.delta));
    rep.line("T", format_series(nf.T.series()));
    rep.line("normal form", format_series(target));
    rep.line("conjugation check", ok ? "holds" : "fails");
    return ok ? kOk : kVerificationFailed;
}

template <class F>
int cmd_solve(const JobConfig &cfg, const F &field, Report &rep)
{
    using S = typename F::Scalar;
    const Truncation t = truncation_of(cfg);
    const auto [gen, lead] = normalize_generator(field.series(cfg.generator, t));
    const unsigned l = gen.l();
    if (cfg.l && *cfg.l != l)
        throw UsageError("--l " + std::to_string(*cfg.l) + " does not match the generator (order " +
                         std::to_string(l + 1) + ")");
    const S c1 = field.scalar(cfg.c1);
    const auto nf_over = index_map(field, cfg.free, "--free");
    const auto nf = normal_form(gen, nf_over);

    std::optional<AJSolution<S>> sol;
    if (cfg.method == "full") {
        SolutionParams<S> p{c1, std::nullopt, {}};
        if (detail::has_lp1_param(l, t))
            p.c_lp1 = cfg.c_lp1 ? field.scalar(*cfg.c_lp1) : zero_like(c1);
        else if (cfg.c_lp1)
            throw UsageError("--c-lp1 is not a parameter for l=" + std::to_string(l) + " at " + t.to_string());
        if (detail::has_tail_param(l, t)) {
            if (cfg.tail)
                for (const std::string &item : split(*cfg.tail, ','))
                    p.tail.push_back(field.scalar(item));
            else
                p.tail.assign(l, zero_like(c1));
        } else if (cfg.tail) {
            throw UsageError("--tail is not a parameter for l=" + std::to_string(l) + " at " + t.to_string());
        }
        sol = solve_full(gen, p, nf_over);
    } else if (cfg.method == "direct") {
        sol = solve_direct_recurrence(gen, c1, index_map(field, cfg.seeds, "--seeds"));
    } else if (cfg.method == "l0-conjugation") {
        sol = solve_l0_conjugation(gen, c1);
    } else {
        throw UsageError("unknown --method '" + cfg.method + "' (full, direct, l0-conjugation)");
    }
    const bool ok = aj_residual(gen, sol->phi.series()).is_zero();

    auto &d = rep.doc();
    d["field"] = field.name();
    d["method"] = cfg.method;
    d["generator"] = to_json(gen.series());
    d["l"] = l;
    d["delta"] = to_json(nf.delta);
    d["T"] = to_json(nf.T.series());
    d["params"] = to_json(sol->params);
    d["solution"] = to_json(sol->phi.series());
    d["free_choices"] = {{"T", to_json(nf.free_choices)}, {"solution", to_json(sol->free_choices)}};
    d["residual_zero"] = ok;

    rep.line("generator", format_series(gen.series()));
    rep.line("l", std::to_string(l));
    if (l >= 1)
        rep.line("delta", format_scalar(nf.delta));
    rep.line("solution", format_series(sol->phi.series()));
    rep.line("residual", ok ? "0" : "nonzero");
    return ok ? kOk : kVerificationFailed;
}

template <class F>
int cmd_verify(const JobConfig &cfg, const F &field, Report &rep)
{
    const Truncation t = truncation_of(cfg);
    if (cfg.series.empty())
        throw UsageError("--series is required");
    const auto [gen, lead] = normalize_generator(field.series(cfg.generator, t));
    const auto phi = field.series(cfg.series, t);
    const auto res = aj_residual(gen, phi);
    std::optional<unsigned> first_row;
    for (const auto &[n, v] : coefficient_system(gen, phi))
        if (!is_zero(v)) {
            first_row = n;
            break;
        }
    const bool ok = res.is_zero();
    if (ok != !first_row)
        throw std::logic_error("residual and coefficient system disagree");

    auto &d = rep.doc();
    d["field"] = field.name();
    d["generator"] = to_json(gen.series());
    d["series"] = to_json(phi);
    d["residual"] = to_json(res);
    d["residual_zero"] = ok;
    d["first_failing_row"] = first_row ? json(*first_row) : json(nullptr);

    rep.line("generator", format_series(gen.series()));
    rep.line("series", format_series(phi));
    rep.line("residual", format_series(res));
    if (first_row)
        rep.line("first failing row", std::to_string(*first_row));
    rep.line("verdict", ok ? "solution" : "not a solution");
    return ok ? kOk : kVerificationFailed;
}

template <class F>
int cmd_group_check(const JobConfig &cfg, const F &field, Report &rep)
{
    using S = typename F::Scalar;
    const Truncation t = truncation_of(cfg);
    const auto [gen, lead] = normalize_generator(field.series(cfg.generator, t));
    const unsigned l = gen.l();
    const auto nf = normal_form(gen);
    const Series<S> Tser = nf.T.series();
    const Series<S> Tinv = compositional_inverse(nf.T).series();
    const std::uint64_t seed = rng_seed_of(cfg);
    std::mt19937_64 rng(seed);

    std::vector<S> units;
    if (l >= 1) {
        units = roots_of_unity(l, field.like);
    } else {
        units.push_back(one_like(field.like));
        while (units.size() < 4) {
            S c = field.random(rng);
            if (!is_zero(c))
                units.push_back(c);
        }
    }
    auto random_unit = [&]() -> S {
        if (l >= 1)
            return units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        for (;;) {
            S c = field.random(rng);
            if (!is_zero(c))
                return c;
        }
    };

    std::vector<Series<S>> G;
    std::vector<DiamondElement<S>> params;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        SolutionParams<S> p{random_unit(), std::nullopt, {}};
        if (detail::has_lp1_param(l, t))
            p.c_lp1 = field.random(rng);
        if (detail::has_tail_param(l, t))
            for (unsigned j = 0; j < l; ++j)
                p.tail.push_back(field.random(rng));
        G.push_back(solve_full(gen, p).phi.series());
    }
    auto lin = [&](const S &c) { return compose(compose(Tser, Series<S>::linear(t, c)), Tinv); };
    std::vector<Series<S>> Hsub;
    for (const S &c : units)
        Hsub.push_back(lin(c));

    GroupOps<Series<S>> ops{
        [](const Series<S> &a, const Series<S> &b) { return compose(a, b); },
        [](const Series<S> &a) { return compositional_inverse(Gamma<S>(a)).series(); },
        Series<S>::identity(t, field.like),
    };
    const std::string claim =
        (l >= 1 && t.is_finite() && units.size() > 1) ? "semidirect-not-direct" : "direct";
    auto report = splitting_check<Series<S>>(
        G, Hsub, [&](const Series<S> &g) { return lin(g[1]); }, ops, claim,
        [](const Series<S> &f) { return format_series(f); });

    // Closure and the parameter map on consecutive pairs. Read off the
    // coefficients, the map only follows the hat law once s >= 2l: below that
    // the tail entries multiply into indices j+k-1 <= s.
    const auto variant = diamond_shape(l, t).first;
    const bool law_expected = !(variant == DiamondVariant::Hat && t.bound() < 2 * l);
    std::size_t law_failures = 0;
    for (std::size_t k = 0; k < G.size(); ++k) {
        const Series<S> &a = G[k];
        const Series<S> &b = G[(k + 1) % G.size()];
        const Series<S> ab = compose(a, b);
        if (!aj_residual(gen, ab).is_zero())
            report.violations.push_back("composition leaves the solution set at sample " + std::to_string(k));
        if (!aj_residual(gen, ops.inverse(a)).is_zero())
            report.violations.push_back("inverse leaves the solution set at sample " + std::to_string(k));
        const auto pab = params_of_solution(ab, gen, nf);
        if (!(pab == diamond_compose(params_of_solution(a, gen, nf), params_of_solution(b, gen, nf)))) {
            ++law_failures;
            if (law_expected)
                report.violations.push_back("parameter map is not multiplicative at sample " + std::to_string(k));
        }
    }

    auto &d = rep.doc();
    d["field"] = field.name();
    d["generator"] = to_json(gen.series());
    d["l"] = l;
    d["group"] = to_string(variant);
    d["parameter_map"] = {{"law_expected", law_expected}, {"failures", law_failures}};
    d["samples"] = cfg.samples;
    d["rng_seed"] = seed;
    d["claim"] = report.claim;
    d["sampled"] = report.sampled;
    d["violations"] = report.violations;
    d["witness"] = report.witness ? json::array({to_json(report.witness->first), to_json(report.witness->second)})
                                  : json(nullptr);

    rep.line("generator", format_series(gen.series()));
    rep.line("claim", report.claim);
    rep.line("sampled", std::to_string(report.sampled));
    if (report.witness) {
        rep.line("witness", format_series(report.witness->first) + " , " + format_series(report.witness->second));
    }
    rep.line("parameter map", law_failures == 0 ? "multiplicative"
                                                : "not multiplicative on " + std::to_string(law_failures) +
                                                      " pairs" + (law_expected ? "" : " (coordinate law needs s >= 2l)"));
    for (const std::string &v : report.violations)
        rep.line("violation", v);
    rep.line("verdict", report.holds() ? "holds" : "violated");
    return report.holds() ? kOk : kVerificationFailed;
}

int cmd_flow_check(const JobConfig &cfg, Report &rep)
{
    if (!cfg.l || *cfg.l == 0)
        throw UsageError("--l >= 1 is required");
    if (cfg.s)
        throw UsageError("flow-check takes --precision, not --s");
    const unsigned N = cfg.precision.value_or(15);
    check_cap(N, "--precision");
    const FlowFamily F = build_genex_family(*cfg.l, N);
    const TranslationReport tr = check_translation_equation(F);
    const auto H = extract_generator(F);
    const auto samples = flow_solves_aj(F, {Rational(1), Rational(-2), Rational(3, 7)});
    bool ok = tr.holds && tr.zero_is_identity;

    auto &d = rep.doc();
    d["l"] = *cfg.l;
    d["precision"] = N;
    if (tr.holds)
        d["translation_identity"] = "holds";
    else
        d["translation_identity"] = {{"fails_at", json::array({tr.fails_at->first, to_json(tr.fails_at->second)})}};
    d["generator"] = to_json(H);
    d["zero_is_identity"] = tr.zero_is_identity;
    d["one_is_identity"] = tr.one_is_identity;
    d["commutes"] = tr.commutes;
    json js = json::array();
    for (const auto &r : samples) {
        js.push_back({{"t", to_json(r.t0)}, {"residual_zero", r.residual_zero}});
        ok = ok && r.residual_zero;
    }
    d["solves_aj"] = js;

    rep.line("l", std::to_string(*cfg.l));
    rep.line("precision", std::to_string(N));
    rep.line("translation_identity",
             tr.holds ? "holds"
                      : "fails at x^" + std::to_string(tr.fails_at->first) + ": " +
                            tr.fails_at->second.to_string({"t1", "t2"}));
    rep.line("generator", format_series(H));
    rep.line("F_0 = id", yes_no(tr.zero_is_identity));
    rep.line("F_1 = id", yes_no(tr.one_is_identity));
    for (const auto &r : samples)
        rep.line("residual at t=" + r.t0.to_string(), r.residual_zero ? "0" : "nonzero");

    if (cfg.evidence) {
        const QFlowEvidence ev = q_flow_evidence(*cfg.l, N);
        d["evidence"] = {{"kind", "evidence"},
                         {"agrees", ev.agrees},
                         {"first_mismatch", ev.first_mismatch ? json(*ev.first_mismatch) : json(nullptr)}};
        rep.line("evidence (Q(t,0) vs family)",
                 ev.agrees ? "agrees" : "differs at r=" + std::to_string(*ev.first_mismatch));
        ok = ok && ev.agrees;
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_comb_debug(const JobConfig &cfg, Report &rep)
{
    if (cfg.n == 0 || cfg.i == 0)
        throw UsageError("--n and --i must be positive");
    FamilySelector sel{family_kind_from_string(cfg.family), cfg.l.value_or(1)};
    const auto &rows = enumerate(cfg.n, cfg.i, sel);
    json jr = json::array();
    for (const IndexVector &v : rows) {
        jr.push_back(json::array({v.u, v.weight.get_str()}));
        std::string u;
        for (unsigned x : v.u)
            u += (u.empty() ? "(" : ",") + std::to_string(x);
        rep.text(u + ")  B=" + v.weight.get_str());
    }
    auto &d = rep.doc();
    d["n"] = cfg.n;
    d["i"] = cfg.i;
    d["family"] = to_string(sel.kind);
    d["l"] = sel.l;
    d["rows"] = jr;
    if (rows.empty())
        rep.text("(empty)");
    return kOk;
}

template <class F>
int dispatch(const JobConfig &cfg, const F &field, Report &rep)
{
    if (cfg.command == "normalize")
        return cmd_normalize(cfg, field, rep);
    if (cfg.command == "solve")
        return cmd_solve(cfg, field, rep);
    if (cfg.command == "verify")
        return cmd_verify(cfg, field, rep);
    return cmd_group_check(cfg, field, rep);
}

int execute(const JobConfig &cfg, std::ostream &out)
{
    Report rep(cfg, out);
    int code = kOk;
    if (cfg.command == "flow-check") {
        code = cmd_flow_check(cfg, rep);
    } else if (cfg.command == "comb-debug") {
        code = cmd_comb_debug(cfg, rep);
    } else {
        if (cfg.generator.empty())
            throw UsageError("--generator is required");
        if (cfg.field == "Q") {
            code = dispatch(cfg, RationalField{}, rep);
        } else if (cfg.field.rfind("cyclotomic:", 0) == 0) {
            unsigned m = 0;
            try {
                m = static_cast<unsigned>(std::stoul(cfg.field.substr(11)));
            } catch (const std::exception &) {
            }
            if (m == 0)
                throw UsageError("bad field '" + cfg.field + "' (expected cyclotomic:<m>, m >= 1)");
            code = dispatch(cfg, CyclotomicField{CyclotomicElement(m, Rational(0))}, rep);
        } else {
            throw UsageError("unknown field '" + cfg.field + "' (Q or cyclotomic:<m>)");
        }
    }
    rep.finish();
    return code;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    JobConfig cfg;
    CLI::App app{"Exact solver for the equation (H o Phi)(x) = Phi'(x) * H(x) over truncated power series",
                 "ajforge"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App *sub) {
        sub->add_option("--field", cfg.field, "Q or cyclotomic:<m>")->capture_default_str();
        sub->add_option("--s", cfg.s, "finite truncation order");
        sub->add_option("--precision", cfg.precision, "working precision N for infinite series");
        sub->add_option("--output", cfg.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--generator", cfg.generator, "generator H, e.g. \"x^2 + 3x^3\"");
    };

    auto *normalize = app.add_subcommand("normalize", "normal form x^{l+1} + delta x^{2l+1} and the map T");
    common(normalize);
    normalize->add_option("--free", cfg.free, "overrides for free coefficients of T, j=value,...");

    auto *solve = app.add_subcommand("solve", "construct a solution from its parameters");
    common(solve);
    solve->add_option("--l", cfg.l, "expected l (order of H minus 1)");
    solve->add_option("--c1", cfg.c1, "linear coefficient")->capture_default_str();
    solve->add_option("--c-lp1", cfg.c_lp1, "coefficient c_{l+1}");
    solve->add_option("--tail", cfg.tail, "tail c_{s-l+1},...,c_s, comma separated");
    solve->add_option("--seeds", cfg.seeds, "free coefficients for --method direct, j=value,...");
    solve->add_option("--free", cfg.free, "overrides for free coefficients of T, j=value,...");
    solve->add_option("--method", cfg.method, "full, direct or l0-conjugation")->capture_default_str();

    auto *verify = app.add_subcommand("verify", "check that a series solves the equation");
    common(verify);
    verify->add_option("--series", cfg.series, "candidate solution Phi");

    auto *group = app.add_subcommand("group-check", "sampled structure of the solution group");
    common(group);
    group->add_option("--samples", cfg.samples, "number of random solutions")->capture_default_str();
    group->add_option("--rng-seed", cfg.rng_seed, "seed for the sampler")->capture_default_str();

    auto *flow = app.add_subcommand("flow-check", "translation equation for the rising-factorial flow family");
    flow->add_option("--l", cfg.l, "l >= 1");
    flow->add_option("--precision", cfg.precision, "working precision N (default 15)");
    flow->add_option("--s", cfg.s, "not accepted; use --precision");
    flow->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    flow->add_flag("--evidence", cfg.evidence, "compare Q_{rl+1}(t, 0) against the family");

    auto *comb = app.add_subcommand("comb-debug", "list an index family with multinomial weights");
    comb->add_option("--n", cfg.n, "n")->required();
    comb->add_option("--i", cfg.i, "i")->required();
    comb->add_option("--family", cfg.family, "U, hat, bar, restricted, check or tilde")->capture_default_str();
    comb->add_option("--l", cfg.l, "l for restricted families");
    comb->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char *> argv;
    for (const std::string &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return execute(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const ParseError &e) {
        err << "parse-error: " << e.what() << "\n";
    } catch (const Error &e) {
        err << e.name() << ": " << e.what() << "\n";
    }
    return kUsageError;
}

} // namespace ajforge::cli
