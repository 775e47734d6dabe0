#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperhall/sigma.hpp"
#include "hyperhall/valency.hpp"

namespace hyperhall {

/// A chain {1} = F_0 ⊂ ... ⊂ F_n = H whose step quotients are thin and each of
/// σ_j-number order for some class j (chosen per step).
std::optional<Chain> sigma_solvable_chain(const Analysis& analysis, const PrimePartition& sigma);

bool is_sigma_solvable(const Analysis& analysis, const PrimePartition& sigma);

/// Same, for a closed subset viewed as a hypergroup.
bool is_sigma_solvable(const Analysis& analysis, const PrimePartition& sigma, ElementSet c);

/// A chain with thin step quotients of prime order; its existence is what makes a
/// hypergroup solvable.
std::optional<Chain> solvable_chain(const Analysis& analysis);

struct PiValencedResult
{
    bool valenced = true;
    /// (U, h) violating the condition, when not valenced.
    std::optional<std::pair<ElementSet, int>> counterexample;
    /// Sets (h^U)*(h^U) that were closed but whose valency differed from their cardinality.
    std::vector<std::string> valency_mismatches;
    std::size_t conditions_checked = 0;
};

/// For every subnormal closed U with n_U a Π-number and every h: if all elements of
/// (h^U)*(h^U) in H//U are thin, its cardinality must be a Π-number. Requires H RT.
PiValencedResult is_pi_valenced(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

/// Closed subsets C with n_C a Π-number. Requires H RT.
std::vector<ElementSet> closed_pi_subsets(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

/// O_Π(H): the largest subnormal closed Π-subset. Checks that it is the unique maximal
/// one, that it contains every subnormal closed Π-subset, that it is strongly normal
/// and that H//O_Π(H) is thin; throws HypothesisError naming every guarantee that broke.
ElementSet pi_radical(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

/// Closed C with n_C a Π-number and n_H/n_C a Π'-number, in canonical order.
std::vector<ElementSet> hall_subsets_enumerated(const Analysis& analysis, const PrimePartition& sigma,
                                                const PiSelection& pi);

/// Hall Π-subset built through the Π-radical: a Hall Π-subgroup of the group H//O_Π(H),
/// found by scanning its subgroups, lifted back to H. Refuses with HypothesisError
/// unless H is RT, σ-solvable and Π-valenced.
ElementSet hall_subset_constructive(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

/// True when xSx* ⊆ T and x*Tx ⊆ S.
bool conjugates_by(const FiniteHypergroup& h, ElementSet s, ElementSet t, int x);

/// Smallest x with xSx* ⊆ T and x*Tx ⊆ S.
std::optional<int> are_conjugate(const FiniteHypergroup& h, ElementSet s, ElementSet t);

struct HypothesisFlags
{
    bool is_rt = false;
    bool is_sigma_solvable = false;
    bool is_pi_valenced = false;

    bool all() const { return is_rt && is_sigma_solvable && is_pi_valenced; }
};

struct ConjugacyWitness
{
    int first; // indices into HallReport::hall_subsets
    int second;
    std::optional<int> element;
};

struct ContainmentWitness
{
    ElementSet pi_subset;
    std::optional<int> hall_index;
};

struct HallReport
{
    HypothesisFlags flags;
    std::optional<PiValencedResult> valenced_detail;

    std::optional<ElementSet> radical;
    std::string radical_error;

    std::vector<ElementSet> hall_subsets;
    std::optional<ElementSet> constructive;
    std::string constructive_error;

    std::vector<ConjugacyWitness> conjugacy;
    std::vector<ContainmentWitness> containment;

    /// Conclusions (i)-(iii); nullopt where undefined (H not RT).
    std::optional<bool> existence;
    std::optional<bool> conjugate;
    std::optional<bool> contained;

    bool conclusions_hold() const
    {
        return existence.value_or(false) && conjugate.value_or(false) && contained.value_or(false);
    }

    /// Every conclusion holds whenever the hypotheses do.
    bool consistent() const { return !flags.all() || conclusions_hold(); }
};

/// Evaluates the hypotheses and the three Hall conclusions. Never refuses: when a
/// hypothesis fails the conclusions are still recorded for information.
HallReport verify_theorem(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi);

/// Re-checks every witness in a report against the hypergroup.
bool witnesses_verify(const Analysis& analysis, const HallReport& report);

} // namespace hyperhall
