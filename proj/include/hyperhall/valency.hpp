#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperhall/lattice.hpp"

namespace hyperhall {

using Valency = std::uint64_t;

/// {s | s*s = {1}}
ElementSet thin_elements(const FiniteHypergroup& h);

/// True iff every element is thin. A thin table must have singleton products;
/// anything else raises InternalError.
bool is_thin(const FiniteHypergroup& h);

/// A closed-subset lattice together with, for every comparable pair F ⊊ G,
/// whether G//F (taken inside G) is thin and how many double cosets it has.
class Analysis
{
public:
    static Analysis build(const FiniteHypergroup& h, LatticeOptions options = {});
    explicit Analysis(ClosedSubsetLattice lattice);

    const ClosedSubsetLattice& lattice() const { return _lattice; }
    const FiniteHypergroup& hypergroup() const { return _lattice.hypergroup(); }

    /// f ⊊ g required.
    bool step_thin(int f, int g) const { return _step_thin[f * _lattice.size() + g]; }
    int step_order(int f, int g) const { return _step_order[f * _lattice.size() + g]; }

private:
    ClosedSubsetLattice _lattice;
    std::vector<char> _step_thin;
    std::vector<int> _step_order;
};

/// An ascending chain of closed subsets starting at {1}.
struct Chain
{
    std::vector<ElementSet> subsets;
    /// F_i//F_{i-1}, each computed inside F_i
    std::vector<FiniteHypergroup> step_quotients;
    std::vector<int> step_orders;

    Valency order_product() const;
};

using StepPredicate = std::function<bool(int f, int g)>;

/// Depth-first search for a strictly ascending chain of lattice indices from {1} to
/// `top` whose every step satisfies `admissible`. Larger candidates are tried first,
/// so a one-step chain is returned whenever the step {1} ⊂ top itself qualifies.
std::optional<std::vector<int>> search_chain(const Analysis& analysis, int top, const StepPredicate& admissible);

/// Materializes a chain of lattice indices (step quotients are built and validated).
Chain make_chain(const Analysis& analysis, const std::vector<int>& indices);

/// A residually thin chain {1} = F_0 ⊂ ... ⊂ F_n = H, if one exists.
std::optional<Chain> rt_chain(const Analysis& analysis);

/// Same for a closed subset C viewed as a hypergroup.
std::optional<Chain> rt_chain(const Analysis& analysis, ElementSet c);

bool is_rt(const Analysis& analysis);

/// n_H; throws ValencyUndefinedError when H is not residually thin.
Valency valency(const Analysis& analysis);

/// n_C for a closed subset C.
Valency valency_of(const Analysis& analysis, ElementSet c);

/// Up to `limit` distinct RT chains of H, in lexicographic order of lattice indices.
std::vector<Chain> all_rt_chains(const Analysis& analysis, std::size_t limit);

} // namespace hyperhall
