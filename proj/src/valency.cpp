#include "hyperhall/valency.hpp"

#include "hyperhall/quotient.hpp"

namespace hyperhall {

ElementSet thin_elements(const FiniteHypergroup& h)
{
    ElementSet out;
    for (int s = 0; s < h.rank(); ++s)
        if (h.product(h.star(s), s) == ElementSet::singleton(0))
            out.insert(s);
    return out;
}

bool is_thin(const FiniteHypergroup& h)
{
    if (thin_elements(h) != h.elements())
        return false;
    for (int p = 0; p < h.rank(); ++p)
        for (int q = 0; q < h.rank(); ++q)
            if (h.product(p, q).size() != 1)
                throw InternalError("thin hypergroup with non-singleton product at " + std::to_string(p) + " "
                                    + std::to_string(q));
    return true;
}

Analysis Analysis::build(const FiniteHypergroup& h, LatticeOptions options)
{
    return Analysis(ClosedSubsetLattice::build(h, options));
}

Analysis::Analysis(ClosedSubsetLattice lattice) : _lattice(std::move(lattice))
{
    const int n = _lattice.size();
    const auto& h = _lattice.hypergroup();
    _step_thin.assign(n * n, 0);
    _step_order.assign(n * n, 0);
    for (int g = 0; g < n; ++g) {
        auto ambient = sub_hypergroup(h, _lattice.subset(g));
        for (int f = 0; f < g; ++f) {
            if (!_lattice.includes(f, g))
                continue;
            auto map = detail::quotient_unvalidated(ambient.hypergroup, ambient.to_local(_lattice.subset(f)));
            _step_order[f * n + g] = map.quotient.rank();
            _step_thin[f * n + g] = thin_elements(map.quotient) == map.quotient.elements();
        }
    }
}

Valency Chain::order_product() const
{
    Valency product = 1;
    for (int o : step_orders)
        product *= static_cast<Valency>(o);
    return product;
}

std::optional<std::vector<int>> search_chain(const Analysis& analysis, int top, const StepPredicate& admissible)
{
    const auto& lattice = analysis.lattice();
    std::vector<char> dead(lattice.size(), 0);
    std::vector<int> path{lattice.bottom()};

    std::function<bool(int)> dfs = [&](int cur) {
        if (cur == top)
            return true;
        for (int next = top; next > cur; --next) {
            if (dead[next] || !lattice.includes(cur, next) || !lattice.includes(next, top))
                continue;
            if (!admissible(cur, next))
                continue;
            path.push_back(next);
            if (dfs(next))
                return true;
            path.pop_back();
        }
        dead[cur] = 1;
        return false;
    };
    if (dfs(lattice.bottom()))
        return path;
    return std::nullopt;
}

Chain make_chain(const Analysis& analysis, const std::vector<int>& indices)
{
    const auto& lattice = analysis.lattice();
    Chain chain;
    for (int i : indices)
        chain.subsets.push_back(lattice.subset(i));
    for (std::size_t k = 1; k < indices.size(); ++k) {
        auto rq = relative_quotient(analysis.hypergroup(), lattice.subset(indices[k - 1]), lattice.subset(indices[k]));
        chain.step_orders.push_back(rq.map.quotient.rank());
        chain.step_quotients.push_back(rq.map.quotient);
    }
    return chain;
}

std::optional<Chain> rt_chain(const Analysis& analysis, ElementSet c)
{
    int top = analysis.lattice().index_of(c);
    auto path = search_chain(analysis, top, [&](int f, int g) { return analysis.step_thin(f, g); });
    if (!path)
        return std::nullopt;
    return make_chain(analysis, *path);
}

std::optional<Chain> rt_chain(const Analysis& analysis)
{
    return rt_chain(analysis, analysis.hypergroup().elements());
}

bool is_rt(const Analysis& analysis)
{
    int top = analysis.lattice().top();
    return search_chain(analysis, top, [&](int f, int g) { return analysis.step_thin(f, g); }).has_value();
}

Valency valency_of(const Analysis& analysis, ElementSet c)
{
    int top = analysis.lattice().index_of(c);
    auto path = search_chain(analysis, top, [&](int f, int g) { return analysis.step_thin(f, g); });
    if (!path)
        throw ValencyUndefinedError("valency undefined: " + c.to_string() + " is not residually thin");
    Valency product = 1;
    for (std::size_t k = 1; k < path->size(); ++k)
        product *= static_cast<Valency>(analysis.step_order((*path)[k - 1], (*path)[k]));
    return product;
}

Valency valency(const Analysis& analysis)
{
    return valency_of(analysis, analysis.hypergroup().elements());
}

std::vector<Chain> all_rt_chains(const Analysis& analysis, std::size_t limit)
{
    const auto& lattice = analysis.lattice();
    const int top = lattice.top();
    std::vector<std::vector<int>> found;
    std::vector<int> path{lattice.bottom()};
    std::vector<char> dead(lattice.size(), 0);
    if (limit == 0)
        return {};

    // Returns whether some chain through `cur` reaches the top.
    std::function<bool(int)> dfs = [&](int cur) {
        if (cur == top) {
            found.push_back(path);
            return true;
        }
        bool reached = false;
        for (int next = cur + 1; next < lattice.size() && found.size() < limit; ++next) {
            if (dead[next] || !lattice.includes(cur, next) || !analysis.step_thin(cur, next))
                continue;
            path.push_back(next);
            reached = dfs(next) || reached;
            path.pop_back();
        }
        if (!reached && found.size() < limit)
            dead[cur] = 1;
        return reached;
    };
    dfs(lattice.bottom());

    std::vector<Chain> chains;
    for (const auto& p : found)
        chains.push_back(make_chain(analysis, p));
    return chains;
}

} // namespace hyperhall
