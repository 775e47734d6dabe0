#include "hyperhall/lattice.hpp"

#include <algorithm>
#include <deque>

namespace hyperhall {

namespace {

bool normal_unchecked(const FiniteHypergroup& h, ElementSet e, ElementSet f)
{
    bool ok = true;
    f.for_each([&](int x) {
        if (ok) {
            auto hx = ElementSet::singleton(x);
            ok = complex_product(h, e, hx).subset_of(complex_product(h, hx, e));
        }
    });
    return ok;
}

bool strongly_normal_unchecked(const FiniteHypergroup& h, ElementSet e, ElementSet f)
{
    bool ok = true;
    f.for_each([&](int x) {
        if (ok) {
            auto conj = complex_product(h, ElementSet::singleton(h.star(x)),
                                        complex_product(h, e, ElementSet::singleton(x)));
            ok = conj.subset_of(e);
        }
    });
    return ok;
}

void require_pair(const FiniteHypergroup& h, ElementSet e, ElementSet f, const char* what)
{
    require_closed(h, e, what);
    require_closed(h, f, what);
    if (!e.subset_of(f))
        throw PreconditionError(std::string(what) + ": " + e.to_string() + " is not contained in " + f.to_string());
}

} // namespace

bool is_normal(const FiniteHypergroup& h, ElementSet e, ElementSet f)
{
    require_pair(h, e, f, "is_normal");
    return normal_unchecked(h, e, f);
}

bool is_strongly_normal(const FiniteHypergroup& h, ElementSet e, ElementSet f)
{
    require_pair(h, e, f, "is_strongly_normal");
    return strongly_normal_unchecked(h, e, f);
}

ElementSet product_closed(const FiniteHypergroup& h, ElementSet c, ElementSet d)
{
    require_closed(h, c, "product_closed");
    require_closed(h, d, "product_closed");
    auto cd = complex_product(h, c, d);
    auto cd_star = star_set(h, cd);
    for (int a : cd_star.members())
        for (int b : cd.members()) {
            auto ab = h.product(a, b);
            if (!ab.subset_of(cd))
                throw PreconditionError("product_closed: CD = " + cd.to_string() + " is not closed; "
                                        + std::to_string(a) + "·" + std::to_string(b) + " = " + ab.to_string()
                                        + " escapes");
        }
    return cd;
}

ElementSet intersect(const FiniteHypergroup& h, ElementSet c, ElementSet d)
{
    require_closed(h, c, "intersect");
    require_closed(h, d, "intersect");
    return c & d;
}

ClosedSubsetLattice ClosedSubsetLattice::build(const FiniteHypergroup& h, LatticeOptions options)
{
    if (h.rank() > options.rank_cap)
        throw RankCapError("closed subset lattice", h.rank(), options.rank_cap);

    ClosedSubsetLattice lattice(h, options);

    // Breadth-first: every closed C is reached from {1} by adjoining its elements one at a time.
    std::unordered_map<std::uint64_t, int> seen;
    std::vector<ElementSet> found;
    std::deque<ElementSet> queue;
    auto bottom = closure(h, ElementSet{});
    seen.emplace(bottom.bits(), 0);
    found.push_back(bottom);
    queue.push_back(bottom);
    const auto all = h.elements();
    while (!queue.empty()) {
        auto f = queue.front();
        queue.pop_front();
        (all - f).for_each([&](int x) {
            auto grown = f;
            grown.insert(x);
            auto c = closure(h, grown);
            if (seen.emplace(c.bits(), 0).second) {
                found.push_back(c);
                queue.push_back(c);
            }
        });
    }

    std::sort(found.begin(), found.end(), CanonicalLess{});
    lattice._subsets = std::move(found);
    const int n = lattice.size();
    for (int i = 0; i < n; ++i)
        lattice._index.emplace(lattice._subsets[i].bits(), i);

    lattice._normal.assign(n * n, 0);
    lattice._strongly_normal.assign(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lattice.includes(i, j))
                continue;
            lattice._normal[i * n + j] = normal_unchecked(h, lattice._subsets[i], lattice._subsets[j]);
            lattice._strongly_normal[i * n + j] = strongly_normal_unchecked(h, lattice._subsets[i], lattice._subsets[j]);
        }

    // Canonical order sorts by size, so every proper superset has a larger index.
    lattice._subnormal.assign(n, 0);
    lattice._subnormal[n - 1] = 1;
    for (int j = n - 1; j >= 0; --j) {
        if (!lattice._subnormal[j])
            continue;
        for (int i = 0; i < j; ++i)
            if (lattice._normal[i * n + j])
                lattice._subnormal[i] = 1;
    }
    return lattice;
}

std::optional<int> ClosedSubsetLattice::find(ElementSet s) const
{
    auto it = _index.find(s.bits());
    if (it == _index.end())
        return std::nullopt;
    return it->second;
}

int ClosedSubsetLattice::index_of(ElementSet s) const
{
    auto i = find(s);
    if (!i)
        throw PreconditionError(s.to_string() + " is not a closed subset");
    return *i;
}

std::optional<std::vector<int>> ClosedSubsetLattice::subnormal_chain(int sub, int super) const
{
    if (!includes(sub, super))
        throw PreconditionError("subnormal_chain: " + _subsets[sub].to_string() + " is not contained in "
                                + _subsets[super].to_string());
    const int n = size();
    std::vector<int> parent(n, -2);
    std::deque<int> queue{sub};
    parent[sub] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == super) {
            std::vector<int> chain;
            for (int at = cur; at != -1; at = parent[at])
                chain.push_back(at);
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
        for (int next = cur + 1; next < n; ++next)
            if (parent[next] == -2 && includes(next, super) && normal_in(cur, next)) {
                parent[next] = cur;
                queue.push_back(next);
            }
    }
    return std::nullopt;
}

std::size_t ClosedSubsetLattice::normal_pair_count() const
{
    return static_cast<std::size_t>(std::count(_normal.begin(), _normal.end(), 1));
}

std::size_t ClosedSubsetLattice::strongly_normal_pair_count() const
{
    return static_cast<std::size_t>(std::count(_strongly_normal.begin(), _strongly_normal.end(), 1));
}

ClosedSubsetLattice closed_subsets(const FiniteHypergroup& h, LatticeOptions options)
{
    return ClosedSubsetLattice::build(h, options);
}

std::optional<std::vector<ElementSet>> is_subnormal(const ClosedSubsetLattice& lattice, ElementSet e, ElementSet f)
{
    int ei = lattice.index_of(e);
    int fi = lattice.index_of(f);
    auto chain = lattice.subnormal_chain(ei, fi);
    if (!chain)
        return std::nullopt;
    std::vector<ElementSet> out;
    for (int i : *chain)
        out.push_back(lattice.subset(i));
    return out;
}

} // namespace hyperhall
