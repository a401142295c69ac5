#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "satopo/stratified.hpp"

namespace satopo {

enum class IdentityId {
    KH_LOC_FIBER, KH_LOC_LE, KH_LOC_GE, SEKALSKI,
    T3_1_GE, T3_1_LE, C3_2_FIBER, C3_2_DIFF, C3_3, C3_4,
    P3_6_GE, P3_6_LE, C3_7_FIBER, C3_7_DIFF, P3_8_LE, P3_8_GE, C3_9,
    T3_16, T3_17, C3_18, P3_19, T3_20, T3_21_LE, T3_21_GE, C3_22,
    P4_1_GE, P4_1_LE, C4_2_FIBER, C4_2_DIFF, P4_3_LINKS, T4_4, T4_5_ALL,
    P5_4_ALL, P5_5_ALL, T5_6, T5_8,
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string& name);
/// Identities about a function on the plane (as opposed to a plane set).
bool is_function_identity(IdentityId id);
/// Identities that depend on a level alpha.
bool uses_alpha(IdentityId id);

/// One displayed equation; holds when |lhs - rhs| <= tol (tol is zero
/// except for the sampled Gauss-Bonnet comparison).
struct Equation {
    std::string name;
    Rat lhs, rhs;
    Rat tol = 0;
    bool holds() const { return abs(lhs - rhs) <= tol; }
};

struct IdentityReport {
    IdentityId id = IdentityId::SEKALSKI;
    std::string input;
    std::vector<Equation> equations;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    std::optional<std::string> skipped_reason;
    bool degenerate = false;  // skipped because the input itself is unusable

    bool skipped() const { return skipped_reason.has_value(); }
    bool pass() const;
    /// The first failing equation, else the first one.
    const Equation* head() const;
    nlohmann::ordered_json to_json() const;
};

struct VerifyInput {
    enum class Kind { Poly, Region, Curve };
    Kind kind = Kind::Poly;
    BPoly poly;
    std::string text;
    std::optional<Rat> alpha;
    std::optional<Direction> v;
    unsigned seed = 0;
    // Gauss-Bonnet parameters
    bool exact_mode = false;
    int samples = 64;
    Rat tol = Rat(1, 100);

    std::string describe() const;
};

/// One report. Without an explicit alpha the level defaults to 0; without
/// a direction the stratified identities use five fixed generic ones.
IdentityReport verify(IdentityId id, const VerifyInput& in);
/// Several identities on one input, sharing intermediate results.
std::vector<IdentityReport> verify_many(const std::vector<IdentityId>& ids, const VerifyInput& in);

/// Every identity applicable to the input, sharing intermediate results.
/// Level-dependent identities run at the given alpha, or at three levels
/// (below, between and above the breakpoints) when none is given.
std::vector<IdentityReport> verify_all(const VerifyInput& in);

/// Levels below, between and above the fibration breakpoints of f.
std::vector<Rat> default_alphas(const BPoly& f, unsigned seed = 0);

/// Corpus lines: `poly: <expr>`, `region: <expr>`, `curve: <expr>`, each
/// optionally followed by `alpha=Q`, `seed=N` or `v=a/b,c/d` separated by
/// whitespace or ';'. `#` starts a comment. Throws Error naming the line.
std::vector<VerifyInput> parse_corpus(std::istream& in);
VerifyInput parse_input_line(const std::string& line);
/// "a/b,c/d" with (a/b)^2 + (c/d)^2 = 1.
Direction parse_direction(const std::string& text);

struct CorpusResult {
    std::vector<IdentityReport> reports;
    int passed = 0, failed = 0, skipped = 0, degenerate = 0;
    /// 0 when everything passed, 1 on any failure, 2 when some input was
    /// degenerate (and nothing failed).
    int exit_code() const { return failed > 0 ? 1 : degenerate > 0 ? 2 : 0; }
    nlohmann::ordered_json summary() const;
};
CorpusResult run_corpus(const std::vector<VerifyInput>& inputs);

/// Seeded random polynomials of total degree <= max_degree whose critical
/// set is finite and whose gradient has no zero at infinity.
std::vector<BPoly> random_corpus(unsigned seed, int count, int max_degree = 4);

}  // namespace satopo
