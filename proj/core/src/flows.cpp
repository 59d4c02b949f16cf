#include "ajforge/flows.hpp"

namespace ajforge {

Integer l_factorial(unsigned k, unsigned l)
{
    Integer r = 1;
    for (unsigned j = 0; j <= k; ++j)
        r *= Integer(j) * l + 1;
    return r;
}

FlowFamily build_genex_family(unsigned l, unsigned precision)
{
    if (l == 0)
        throw DomainError("flow family needs l >= 1");
    const QPoly like(1);
    const Truncation t = Truncation::infinite(precision);
    Series<QPoly> F = Series<QPoly>::identity(t, like);
    for (unsigned n = 1; n * l + 1 <= precision; ++n) {
        const Rational c(l_factorial(n - 1, l), factorial(n));
        F.set(n * l + 1, QPoly::monomial(1, {n, 0}, c));
    }
    return {l, std::move(F)};
}

namespace {

Series<QPoly> lift(const Series<QPoly> &F, const QPoly &image)
{
    const QPoly like(image.arity());
    Series<QPoly> out(F.truncation(), like);
    for (unsigned k = 0; k <= F.top(); ++k)
        out.set(k, F[k].substitute({image}));
    return out;
}

} // namespace

Series<Rational> flow_at(const FlowFamily &F, const Rational &t0)
{
    Series<Rational> out(F.F.truncation(), Rational(0));
    for (unsigned k = 0; k <= F.F.top(); ++k)
        out.set(k, F.F[k].evaluate({t0}));
    return out;
}

TranslationReport check_translation_equation(const FlowFamily &F)
{
    const QPoly t1 = QPoly::variable(2, 0), t2 = QPoly::variable(2, 1);
    const Series<QPoly> A = lift(F.F, t1);
    const Series<QPoly> B = lift(F.F, t2);
    const Series<QPoly> sum = lift(F.F, t1 + t2);
    const Series<QPoly> AB = compose(A, B);
    const Series<QPoly> diff = sum - AB;

    TranslationReport rep;
    rep.holds = true;
    for (unsigned k = 0; k <= diff.top(); ++k)
        if (!diff[k].is_zero()) {
            rep.holds = false;
            rep.fails_at = std::make_pair(k, diff[k]);
            break;
        }
    const Series<Rational> id = Series<Rational>::identity(F.F.truncation(), Rational(0));
    rep.zero_is_identity = flow_at(F, Rational(0)) == id;
    rep.one_is_identity = flow_at(F, Rational(1)) == id;
    rep.commutes = AB == compose(B, A);
    return rep;
}

Series<Rational> extract_generator(const FlowFamily &F)
{
    Series<Rational> H(F.F.truncation(), Rational(0));
    for (unsigned k = 0; k <= F.F.top(); ++k)
        H.set(k, F.F[k].coeff({1, 0}));
    return H;
}

std::vector<FlowSampleResult> flow_solves_aj(const FlowFamily &F, const std::vector<Rational> &samples)
{
    const Series<Rational> H = extract_generator(F);
    if (H.is_zero())
        throw ZeroSeries("flow family has a zero generator");
    std::vector<FlowSampleResult> out;
    for (const Rational &t0 : samples)
        out.push_back({t0, aj_residual(H, flow_at(F, t0)).is_zero()});
    return out;
}

TruncatedFlowReport truncated_flow_group(const FlowFamily &F, unsigned s,
                                         const std::vector<std::pair<Rational, Rational>> &c_samples)
{
    if (s < 2 || s > F.F.top())
        throw RangeError("truncated flow order out of range");
    const QPoly t = QPoly::variable(2, 0), tp = QPoly::variable(2, 1);
    const Series<QPoly> Ft = project(lift(F.F, t), s);
    const Series<QPoly> Ftp = project(lift(F.F, tp), s);
    const Series<QPoly> Fsum = project(lift(F.F, t + tp), s);

    TruncatedFlowReport rep{s};
    for (const auto &[c, cp] : c_samples) {
        ++rep.sampled;
        auto with_tail = [s](Series<QPoly> f, const Rational &c) {
            f.set(s, f[s] + QPoly(2, c));
            return f;
        };
        const Series<QPoly> a = with_tail(Ft, c);
        const Series<QPoly> b = with_tail(Ftp, cp);
        const Series<QPoly> ab = compose(a, b);
        if (!(ab == with_tail(Fsum, c + cp))) {
            rep.closes = false;
            rep.failures.push_back("composition law fails for c=" + c.to_string() + ", c'=" + cp.to_string());
        }
        if (!(ab == compose(b, a))) {
            rep.commutes = false;
            rep.failures.push_back("family does not commute for c=" + c.to_string() + ", c'=" + cp.to_string());
        }
    }
    return rep;
}

QFlowEvidence q_flow_evidence(unsigned l, unsigned precision)
{
    QFlowEvidence ev{l, precision};
    const FlowFamily F = build_genex_family(l, precision);
    const unsigned r_max = (precision - 1) / l;
    const QPolyTable table = q_poly_table(l, r_max);
    const QPoly t = QPoly::variable(1, 0);
    for (unsigned r = 1; r <= r_max; ++r) {
        const QPoly q = table.entries[r].substitute({t, QPoly(1)});
        if (!(q == F.F[r * l + 1])) {
            ev.agrees = false;
            ev.first_mismatch = r;
            break;
        }
    }
    return ev;
}

} // namespace ajforge
