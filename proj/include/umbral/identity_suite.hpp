#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/special_sequences.hpp"

namespace umbral {

enum class IdentityId {
    lemma1_b,
    lemma1_bhat,
    lemma1_e,
    lemma1_h,
    thm3,
    thm4_corrected,
    thm4_printed,
    thm5,
    thm6,
    eq16,
    eq17,
};

/// "Lemma1.B", "Thm4.printed", "Eq16", ...
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Thm4.printed restates Theorem 3's left side and is expected to mismatch;
/// everything else is expected to hold.
bool expected_equal(IdentityId id);

struct IdentityInstance {
    IdentityId id = IdentityId::thm3;
    unsigned n = 1;  // lemma1: the orthogonality grid bound
    unsigned m = 1;
    std::optional<Rational> lambda;
    std::optional<Rational> alpha;  // lemma1 only
    unsigned truncation = 0;        // series truncation order used
};

enum class Verdict { equal, mismatch, skipped };

/**
 * Outcome of one identity instance. Verdicts are decided by exact Rational
 * coefficient equality -- there is no tolerance anywhere in this module.
 * Lemma-1 instances are orthogonality grids rather than polynomial
 * comparisons; for those lhs/rhs stay empty and a failure is reported as
 * the first offending (n, k) pair.
 */
struct VerificationReport {
    IdentityInstance instance;
    Polynomial lhs;
    Polynomial rhs;
    Verdict verdict = Verdict::equal;
    std::optional<unsigned> first_mismatch_degree;
    std::optional<std::pair<unsigned, unsigned>> orthogonality_failure;
    std::string skip_reason;
};

/// Sheffer orthogonality of one scaled Lemma-1 family (id names which of the
/// four) for all n, k <= n_max. lambda is required for the H family.
VerificationReport verify_lemma1(IdentityId family_id, const Rational& alpha, unsigned m, unsigned n_max,
                                 const std::optional<Rational>& lambda = std::nullopt,
                                 std::optional<unsigned> truncation = std::nullopt);

VerificationReport verify_theorem3(unsigned n, unsigned m,
                                   std::optional<unsigned> truncation = std::nullopt);

/// printed = false compares against the corrected right side derived from
/// the transfer expansion; printed = true against the statement as printed
/// (which duplicates Theorem 3's left side and fails at (n, m) = (2, 1)).
VerificationReport verify_theorem4(unsigned n, unsigned m, bool printed,
                                   std::optional<unsigned> truncation = std::nullopt);

/// Needs odd m (EvenModulus otherwise).
VerificationReport verify_theorem5(unsigned n, unsigned m,
                                   std::optional<unsigned> truncation = std::nullopt);

/// Needs lambda not in {0, 1} and lambda^m != 1 (LambdaForbidden otherwise).
VerificationReport verify_theorem6(unsigned n, unsigned m, const Rational& lambda,
                                   std::optional<unsigned> truncation = std::nullopt);

/// Closed form of the (1, t^2/(e^t-1)) transfer against the operator route.
VerificationReport verify_eq16(unsigned n, std::optional<unsigned> truncation = std::nullopt);

/// Same with e^{mt}: closed form carries the extra m^{2n-1-r} factor.
VerificationReport verify_eq17(unsigned n, unsigned m,
                               std::optional<unsigned> truncation = std::nullopt);

struct SweepConfig {
    std::vector<IdentityId> identities;
    unsigned n_max = 4;
    unsigned m_max = 3;
    /// Thm6 / Lemma1.H sweep values; canonically sorted before use.
    std::vector<Rational> lambdas = default_sweep_lambdas();
    /// Lemma-1 orders.
    std::vector<Rational> alphas = default_sweep_alphas();
    std::optional<unsigned> truncation;
    unsigned jobs = 1;

    static std::vector<Rational> default_sweep_lambdas();
    static std::vector<Rational> default_sweep_alphas();
};

/**
 * Runs every instance of the selected identities over the configured grid,
 * in deterministic (identity, n, m, lambda, alpha) order regardless of job
 * count. Instances whose preconditions exclude them (even m for Thm5,
 * lambda^m = 1 for Thm6, irrational m^alpha) come back as skipped with a
 * reason instead of raising.
 */
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

}  // namespace umbral
