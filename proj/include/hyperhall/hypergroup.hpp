#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hyperhall/element_set.hpp"
#include "hyperhall/error.hpp"

namespace hyperhall {

/// An unvalidated candidate table. products[p * rank + q] lists the members of pq.
struct RawHypergroup
{
    int rank = 0;
    std::vector<int> star;
    std::vector<std::vector<int>> products;
};

enum class Axiom
{
    H1,   // set associativity
    H2,   // s1 = {s}
    H3,   // r in pq implies q in p*r and p in rq*
    Star, // involution with 1* = 1, and (ab)* = b*a*
    Unit, // 1s = {s}
};

const char* to_string(Axiom axiom);

struct Violation
{
    Axiom axiom;
    /// Element indices exhibiting the failure; unused slots are -1.
    std::array<int, 3> witness;
    std::string detail;
};

struct ValidationReport
{
    bool valid = true;
    /// At most one entry per axiom, carrying the lexicographically first witness.
    std::vector<Violation> violations;

    bool violates(Axiom axiom) const;
};

/// Thrown when a candidate parses structurally but is not a hypergroup.
class ValidationError : public Error
{
public:
    explicit ValidationError(ValidationReport report);

    ValidationReport report;
};

class FiniteHypergroup;

namespace detail {
/// Builds a hypergroup without checking the axioms. Only for tables derived
/// from an already valid hypergroup by constructions known to preserve them.
FiniteHypergroup make_trusted(int rank, std::vector<int> star, std::vector<ElementSet> table);
} // namespace detail

/// A finite hypergroup given by its multiplication table. The identity is index 0.
/// Immutable; copies share the underlying table.
class FiniteHypergroup
{
public:
    /// Validates `raw`; throws StructuralError for malformed input and
    /// ValidationError when an axiom fails.
    static FiniteHypergroup create(const RawHypergroup& raw);

    int rank() const { return _data->rank; }
    int star(int s) const { return _data->star[s]; }
    const std::vector<int>& star_map() const { return _data->star; }
    ElementSet product(int p, int q) const { return _data->table[p * _data->rank + q]; }
    ElementSet elements() const { return ElementSet::full(_data->rank); }

    RawHypergroup to_raw() const;

    /// Table equality (no relabeling).
    bool operator==(const FiniteHypergroup& other) const;

private:
    struct Data
    {
        int rank;
        std::vector<int> star;
        std::vector<ElementSet> table;
    };

    explicit FiniteHypergroup(std::shared_ptr<const Data> data) : _data(std::move(data)) {}

    friend FiniteHypergroup detail::make_trusted(int, std::vector<int>, std::vector<ElementSet>);

    std::shared_ptr<const Data> _data;
};

/// Checks every axiom. Throws StructuralError for malformed candidates (wrong
/// dimensions, indices out of range, empty products); axiom failures are
/// reported, not thrown.
ValidationReport validate(const RawHypergroup& candidate);

ValidationReport validate(const FiniteHypergroup& h);

/// PQ: union of pq over p in P, q in Q.
ElementSet complex_product(const FiniteHypergroup& h, ElementSet p, ElementSet q);

/// S* = {s* | s in S}
ElementSet star_set(const FiniteHypergroup& h, ElementSet s);

/// Smallest closed subset containing S and the identity.
ElementSet closure(const FiniteHypergroup& h, ElementSet s);

/// True iff S is nonempty and a*b is contained in S for all a, b in S.
bool is_closed(const FiniteHypergroup& h, ElementSet s);

/// Throws PreconditionError unless `s` is a closed subset of `h`.
void require_closed(const FiniteHypergroup& h, ElementSet s, const char* what);

/// A closed subset viewed as a hypergroup in its own right, with the
/// re-indexing between the two.
struct SubHypergroup
{
    FiniteHypergroup hypergroup;
    /// local index -> index in the ambient hypergroup (ascending, so 0 -> 0)
    std::vector<int> members;
    /// ambient index -> local index, -1 outside the subset
    std::vector<int> local_index;

    ElementSet to_local(ElementSet ambient) const;
    ElementSet to_ambient(ElementSet local) const;
};

SubHypergroup sub_hypergroup(const FiniteHypergroup& h, ElementSet closed);

} // namespace hyperhall
