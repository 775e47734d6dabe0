#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperhall/hypergroup.hpp"

namespace hyperhall {

/// Default rank up to which exhaustive lattice operations are attempted.
inline constexpr int kDefaultRankCap = 24;

struct LatticeOptions
{
    int rank_cap = kDefaultRankCap;
};

/// True iff Eh is contained in hE for every h in F. E must be a closed subset of the closed F.
bool is_normal(const FiniteHypergroup& h, ElementSet e, ElementSet f);

/// True iff h*Eh is contained in E for every h in F. E must be a closed subset of the closed F.
bool is_strongly_normal(const FiniteHypergroup& h, ElementSet e, ElementSet f);

/// CD for closed C, D. Throws PreconditionError naming an escaping product when CD is
/// not closed (which cannot happen when C is normalized by D).
ElementSet product_closed(const FiniteHypergroup& h, ElementSet c, ElementSet d);

/// C ∩ D for closed C, D.
ElementSet intersect(const FiniteHypergroup& h, ElementSet c, ElementSet d);

/// All closed subsets of a hypergroup, with inclusion and the (relativized)
/// normality relations between comparable pairs. Subsets are kept in canonical
/// order, so index 0 is {1} and the last index is the whole hypergroup.
class ClosedSubsetLattice
{
public:
    /// Throws RankCapError when h.rank() exceeds options.rank_cap.
    static ClosedSubsetLattice build(const FiniteHypergroup& h, LatticeOptions options = {});

    const FiniteHypergroup& hypergroup() const { return _hypergroup; }
    const LatticeOptions& options() const { return _options; }

    int size() const { return static_cast<int>(_subsets.size()); }
    const std::vector<ElementSet>& subsets() const { return _subsets; }
    ElementSet subset(int i) const { return _subsets[i]; }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }

    std::optional<int> find(ElementSet s) const;

    /// Index of a closed subset; throws PreconditionError if `s` is not closed.
    int index_of(ElementSet s) const;

    bool includes(int sub, int super) const { return _subsets[sub].subset_of(_subsets[super]); }

    /// sub ⊆ super and sub is normal in super
    bool normal_in(int sub, int super) const { return _normal[sub * size() + super]; }

    /// sub ⊆ super and sub is strongly normal in super
    bool strongly_normal_in(int sub, int super) const { return _strongly_normal[sub * size() + super]; }

    /// Subnormal in the whole hypergroup.
    bool subnormal(int i) const { return _subnormal[i]; }

    /// Shortest chain sub = C_0 ⊆ ... ⊆ C_k = super with each step normal,
    /// as lattice indices; nullopt when none exists.
    std::optional<std::vector<int>> subnormal_chain(int sub, int super) const;

    std::size_t normal_pair_count() const;
    std::size_t strongly_normal_pair_count() const;

private:
    ClosedSubsetLattice(FiniteHypergroup h, LatticeOptions options) : _hypergroup(std::move(h)), _options(options) {}

    FiniteHypergroup _hypergroup;
    LatticeOptions _options;
    std::vector<ElementSet> _subsets;
    std::unordered_map<std::uint64_t, int> _index;
    std::vector<char> _normal;
    std::vector<char> _strongly_normal;
    std::vector<char> _subnormal;
};

/// Same as ClosedSubsetLattice::build.
ClosedSubsetLattice closed_subsets(const FiniteHypergroup& h, LatticeOptions options = {});

/// A witnessing chain E = C_0 ⊆ ... ⊆ C_k = F with each C_{i-1} normal in C_i.
std::optional<std::vector<ElementSet>> is_subnormal(const ClosedSubsetLattice& lattice, ElementSet e, ElementSet f);

} // namespace hyperhall
