#pragma once

#include <optional>
#include <vector>

#include "hyperhall/hypergroup.hpp"

namespace hyperhall {

/// The partition of a hypergroup into double cosets FhF of a closed F together
/// with the quotient hypergroup H//F.
struct QuotientMap
{
    FiniteHypergroup base;
    ElementSet modulus;
    /// Double cosets ordered by smallest member; blocks[0] == modulus.
    std::vector<ElementSet> blocks;
    FiniteHypergroup quotient;
    /// base element -> block index
    std::vector<int> projection;

    /// S//F: the blocks meeting S.
    ElementSet project(ElementSet s) const;

    /// Union of the given blocks.
    ElementSet unite(ElementSet block_indices) const;
};

/// Double cosets FhF, ordered by smallest member. F must be closed.
std::vector<ElementSet> double_cosets(const FiniteHypergroup& h, ElementSet f);

/// H//F with a^F · b^F = {x^F | x in aFb}. The quotient table is re-validated and
/// an InternalError is raised if it fails.
QuotientMap quotient(const FiniteHypergroup& h, ElementSet f);

namespace detail {
/// quotient() without re-validation, for hot loops over lattice pairs.
QuotientMap quotient_unvalidated(const FiniteHypergroup& h, ElementSet f);
}

/// E with E//F = `closed`: the union of the blocks listed in `closed`, which must be
/// a closed subset of q.quotient.
ElementSet lift(const QuotientMap& q, ElementSet closed);

/// G//F computed inside G viewed as a hypergroup. F ⊆ G, both closed in h.
struct RelativeQuotient
{
    SubHypergroup ambient;
    QuotientMap map;
};

RelativeQuotient relative_quotient(const FiniteHypergroup& h, ElementSet f, ElementSet g);

struct IsomorphismOptions
{
    int rank_cap = 8;
};

/// A bijection phi with phi(1) = 1, phi(a*) = phi(a)* and phi(ab) = phi(a)phi(b), as
/// phi[a] for each element a of `a`. Exhaustive backtracking; throws RankCapError when
/// either rank exceeds the cap.
std::optional<std::vector<int>> isomorphic(const FiniteHypergroup& a, const FiniteHypergroup& b,
                                           IsomorphismOptions options = {});

/// Checks that phi is an isomorphism from a to b.
bool is_isomorphism(const FiniteHypergroup& a, const FiniteHypergroup& b, const std::vector<int>& phi);

/// Relabels h by phi (element s becomes phi[s]); phi must fix 0.
FiniteHypergroup relabel(const FiniteHypergroup& h, const std::vector<int>& phi);

} // namespace hyperhall
