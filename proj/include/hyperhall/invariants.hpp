#pragma once

#include <string>
#include <vector>

#include "hyperhall/hall.hpp"
#include "hyperhall/quotient.hpp"

namespace hyperhall {

/// Outcome of instance-checking one structural statement over every applicable tuple.
struct LemmaCheck
{
    std::string name;
    std::size_t instances = 0;
    std::size_t violations = 0;
    /// Instances left unchecked because they exceed the isomorphism rank cap.
    std::size_t skipped = 0;
    /// False when the statement's standing hypothesis (RT, σ-solvable) fails for H.
    bool applicable = true;
    std::string first_violation;

    bool passed() const { return violations == 0; }
};

struct LemmaSuiteOptions
{
    IsomorphismOptions isomorphism;
};

/// Closed-subset, quotient and valency statements: (ab)* = b*a*, strong normality
/// implies normality, thin quotients versus strong normality, the correspondence
/// E -> E//D, the isomorphism theorems, valency multiplicativity, products with normal
/// subsets, and intersections/products of strongly normal pairs. Statements whose
/// hypotheses need residual thinness are not applicable when H is not RT; isomorphism
/// instances above the isomorphism rank cap are counted as skipped.
std::vector<LemmaCheck> structural_lemmas(const Analysis& analysis, LemmaSuiteOptions options = {});

/// σ-solvability statements: closed subsets and quotients by subnormal closed subsets
/// of σ-solvable hypergroups are σ-solvable; E and H//E σ-solvable implies H
/// σ-solvable; and, under the smallest partition, RT plus σ-solvable coincides with
/// having a chain of thin prime-order steps.
std::vector<LemmaCheck> lemma_suite(const Analysis& analysis, const PrimePartition& sigma);

/// With no nontrivial subnormal closed Π-subset and every all-thin h*h of Π-number
/// cardinality, H is thin. Reports one instance when the antecedent holds.
LemmaCheck thin_criterion(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

bool all_passed(const std::vector<LemmaCheck>& checks);

} // namespace hyperhall
