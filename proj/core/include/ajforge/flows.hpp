#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ajforge/aj.hpp"
#include "ajforge/polynomial.hpp"
#include "ajforge/series.hpp"

namespace ajforge {

/// prod_{j=0}^{k} (j·l + 1).
Integer l_factorial(unsigned k, unsigned l);

/// A one-parameter family F_t whose coefficients are polynomials in t.
struct FlowFamily
{
    unsigned l;
    Series<QPoly> F; // coefficients in Q[t] (arity 1)
};

/// F_t(x) = x + sum_{n>=1} ((n-1)l+1)!_l / n! · t^n x^{nl+1}.
FlowFamily build_genex_family(unsigned l, unsigned precision);

/// F at a fixed time t0.
Series<Rational> flow_at(const FlowFamily &F, const Rational &t0);

struct TranslationReport
{
    bool holds = false;
    /// First index where F_{t1+t2} − F_{t1}∘F_{t2} is nonzero, and that
    /// coefficient as a polynomial in (t1, t2).
    std::optional<std::pair<unsigned, QPoly>> fails_at;
    bool zero_is_identity = false;
    bool one_is_identity = false;
    bool commutes = false;
};

/// Decides F_{t1+t2} = F_{t1}∘F_{t2} as an identity in Q[t1, t2][[x]].
TranslationReport check_translation_equation(const FlowFamily &F);

/// The coefficient of t^1 in every coefficient of F.
Series<Rational> extract_generator(const FlowFamily &F);

struct FlowSampleResult
{
    Rational t0;
    bool residual_zero;
};

/// Residual of F_{t0} against the extracted generator for each sample.
std::vector<FlowSampleResult> flow_solves_aj(const FlowFamily &F, const std::vector<Rational> &samples);

struct TruncatedFlowReport
{
    unsigned s;
    std::size_t sampled = 0;
    bool closes = true;
    bool commutes = true;
    std::vector<std::string> failures;
};

/// F̂_{t,c} = π_s F_t + c·x^s composes as (t,c)(t',c') = (t+t', c+c').
/// Symbolic in (t, t'); c and c' range over the given samples.
TruncatedFlowReport truncated_flow_group(const FlowFamily &F, unsigned s,
                                         const std::vector<std::pair<Rational, Rational>> &c_samples);

struct QFlowEvidence
{
    unsigned l;
    unsigned precision;
    bool agrees = true;
    /// First r with Q_{rl+1}(t, 0) different from the family coefficient.
    std::optional<unsigned> first_mismatch;
};

/// Compares Q_{rl+1}(t, 0) with the x^{rl+1} coefficient of the family for
/// rl+1 <= precision.
QFlowEvidence q_flow_evidence(unsigned l, unsigned precision);

} // namespace ajforge
