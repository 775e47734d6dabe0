#include "hyperhall/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace hyperhall {

ElementSet QuotientMap::project(ElementSet s) const
{
    ElementSet out;
    s.for_each([&](int x) { out.insert(projection[x]); });
    return out;
}

ElementSet QuotientMap::unite(ElementSet block_indices) const
{
    ElementSet out;
    block_indices.for_each([&](int b) { out |= blocks[b]; });
    return out;
}

std::vector<ElementSet> double_cosets(const FiniteHypergroup& h, ElementSet f)
{
    require_closed(h, f, "double_cosets");
    std::vector<ElementSet> blocks;
    ElementSet assigned;
    for (int x = 0; x < h.rank(); ++x) {
        if (assigned.contains(x))
            continue;
        auto block = complex_product(h, f, complex_product(h, ElementSet::singleton(x), f));
        if (block.intersects(assigned))
            throw InternalError("double cosets of " + f.to_string() + " overlap at " + block.to_string());
        assigned |= block;
        blocks.push_back(block);
    }
    return blocks;
}

QuotientMap detail::quotient_unvalidated(const FiniteHypergroup& h, ElementSet f)
{
    auto blocks = double_cosets(h, f);
    const int m = static_cast<int>(blocks.size());
    std::vector<int> projection(h.rank(), -1);
    for (int b = 0; b < m; ++b)
        blocks[b].for_each([&](int x) { projection[x] = b; });

    std::vector<int> star(m);
    std::vector<ElementSet> table(m * m);
    for (int i = 0; i < m; ++i) {
        int a = blocks[i].first();
        star[i] = projection[h.star(a)];
        auto af = complex_product(h, ElementSet::singleton(a), f);
        for (int j = 0; j < m; ++j) {
            auto afb = complex_product(h, af, ElementSet::singleton(blocks[j].first()));
            ElementSet image;
            afb.for_each([&](int x) { image.insert(projection[x]); });
            table[i * m + j] = image;
        }
    }
    auto q = detail::make_trusted(m, std::move(star), std::move(table));
    return QuotientMap{h, f, std::move(blocks), std::move(q), std::move(projection)};
}

QuotientMap quotient(const FiniteHypergroup& h, ElementSet f)
{
    auto map = detail::quotient_unvalidated(h, f);
    auto report = validate(map.quotient);
    if (!report.valid)
        throw InternalError("quotient by " + f.to_string() + " failed validation: " + ValidationError(report).what());
    return map;
}

ElementSet lift(const QuotientMap& q, ElementSet closed)
{
    require_closed(q.quotient, closed, "lift");
    return q.unite(closed);
}

RelativeQuotient relative_quotient(const FiniteHypergroup& h, ElementSet f, ElementSet g)
{
    if (!f.subset_of(g))
        throw PreconditionError("relative_quotient: " + f.to_string() + " is not contained in " + g.to_string());
    auto ambient = sub_hypergroup(h, g);
    auto map = quotient(ambient.hypergroup, ambient.to_local(f));
    return RelativeQuotient{std::move(ambient), std::move(map)};
}

namespace {

// Relabeling-invariant fingerprint of an element.
std::vector<int> profile(const FiniteHypergroup& h, int s)
{
    const int n = h.rank();
    std::vector<int> row, col;
    for (int t = 0; t < n; ++t) {
        row.push_back(h.product(s, t).size());
        col.push_back(h.product(t, s).size());
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    std::vector<int> out{s == h.star(s) ? 1 : 0, h.product(h.star(s), s).size(), h.product(s, s).size()};
    out.insert(out.end(), row.begin(), row.end());
    out.insert(out.end(), col.begin(), col.end());
    return out;
}

class IsoSearch
{
public:
    IsoSearch(const FiniteHypergroup& a, const FiniteHypergroup& b) : _a(a), _b(b), _n(a.rank())
    {
        for (int s = 0; s < _n; ++s) {
            _pa.push_back(profile(a, s));
            _pb.push_back(profile(b, s));
        }
        _phi.assign(_n, -1);
        _inv.assign(_n, -1);
    }

    std::optional<std::vector<int>> run()
    {
        if (extend(0))
            return _phi;
        return std::nullopt;
    }

private:
    bool extend(int a)
    {
        if (a == _n)
            return is_isomorphism(_a, _b, _phi);
        for (int b = (a == 0 ? 0 : 1); b < (a == 0 ? 1 : _n); ++b) {
            if (_inv[b] != -1 || _pa[a] != _pb[b])
                continue;
            _phi[a] = b;
            _inv[b] = a;
            if (consistent(a) && extend(a + 1))
                return true;
            _phi[a] = -1;
            _inv[b] = -1;
        }
        return false;
    }

    // Every pair of assigned elements must map products onto products, restricted to
    // members whose images are already fixed.
    bool consistent(int latest) const
    {
        int sa = _a.star(latest);
        if (_phi[sa] != -1 && _phi[sa] != _b.star(_phi[latest]))
            return false;
        for (int x = 0; x <= latest; ++x)
            for (int y = 0; y <= latest; ++y) {
                auto xy = _a.product(x, y);
                auto image = _b.product(_phi[x], _phi[y]);
                if (xy.size() != image.size())
                    return false;
                for (int z = 0; z <= latest; ++z)
                    if (xy.contains(z) != image.contains(_phi[z]))
                        return false;
            }
        return true;
    }

    const FiniteHypergroup& _a;
    const FiniteHypergroup& _b;
    int _n;
    std::vector<std::vector<int>> _pa, _pb;
    std::vector<int> _phi, _inv;
};

} // namespace

std::optional<std::vector<int>> isomorphic(const FiniteHypergroup& a, const FiniteHypergroup& b,
                                           IsomorphismOptions options)
{
    int largest = std::max(a.rank(), b.rank());
    if (largest > options.rank_cap)
        throw RankCapError("isomorphism search", largest, options.rank_cap);
    if (a.rank() != b.rank())
        return std::nullopt;
    return IsoSearch(a, b).run();
}

bool is_isomorphism(const FiniteHypergroup& a, const FiniteHypergroup& b, const std::vector<int>& phi)
{
    const int n = a.rank();
    if (b.rank() != n || static_cast<int>(phi.size()) != n || phi[0] != 0)
        return false;
    std::vector<char> hit(n, 0);
    for (int v : phi) {
        if (v < 0 || v >= n || hit[v])
            return false;
        hit[v] = 1;
    }
    for (int x = 0; x < n; ++x) {
        if (phi[a.star(x)] != b.star(phi[x]))
            return false;
        for (int y = 0; y < n; ++y) {
            ElementSet image;
            a.product(x, y).for_each([&](int z) { image.insert(phi[z]); });
            if (image != b.product(phi[x], phi[y]))
                return false;
        }
    }
    return true;
}

FiniteHypergroup relabel(const FiniteHypergroup& h, const std::vector<int>& phi)
{
    const int n = h.rank();
    if (static_cast<int>(phi.size()) != n || phi[0] != 0)
        throw PreconditionError("relabel: permutation must have rank entries and fix 0");
    std::vector<int> check(phi);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i)
        if (check[i] != i)
            throw PreconditionError("relabel: not a permutation");

    std::vector<int> star(n);
    std::vector<ElementSet> table(n * n);
    for (int x = 0; x < n; ++x) {
        star[phi[x]] = phi[h.star(x)];
        for (int y = 0; y < n; ++y) {
            ElementSet image;
            h.product(x, y).for_each([&](int z) { image.insert(phi[z]); });
            table[phi[x] * n + phi[y]] = image;
        }
    }
    return detail::make_trusted(n, std::move(star), std::move(table));
}

} // namespace hyperhall
