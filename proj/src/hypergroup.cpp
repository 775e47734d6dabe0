#include "hyperhall/hypergroup.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hyperhall {

const char* to_string(Axiom axiom)
{
    switch (axiom) {
    case Axiom::H1: return "H1";
    case Axiom::H2: return "H2";
    case Axiom::H3: return "H3";
    case Axiom::Star: return "STAR";
    case Axiom::Unit: return "UNIT";
    }
    return "?";
}

bool ValidationReport::violates(Axiom axiom) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [axiom](const Violation& v) { return v.axiom == axiom; });
}

namespace {

std::string describe(const ValidationReport& report)
{
    std::ostringstream os;
    os << "not a hypergroup:";
    for (const auto& v : report.violations)
        os << ' ' << to_string(v.axiom) << " (" << v.detail << ')';
    return os.str();
}

// Table-level view shared by validate(raw) and validate(hypergroup).
struct TableView
{
    int rank;
    const std::vector<int>& star;
    const std::vector<ElementSet>& table;

    ElementSet at(int p, int q) const { return table[p * rank + q]; }

    ElementSet left(ElementSet ps, int r) const
    {
        ElementSet out;
        ps.for_each([&](int x) { out |= at(x, r); });
        return out;
    }

    ElementSet right(int p, ElementSet qs) const
    {
        ElementSet out;
        qs.for_each([&](int y) { out |= at(p, y); });
        return out;
    }

    ElementSet starred(ElementSet s) const
    {
        ElementSet out;
        s.for_each([&](int e) { out.insert(star[e]); });
        return out;
    }
};

std::string triple(int a, int b, int c)
{
    return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

ValidationReport check_axioms(const TableView& t)
{
    ValidationReport report;
    const int n = t.rank;
    auto add = [&](Axiom axiom, std::array<int, 3> witness, std::string detail) {
        report.violations.push_back({axiom, witness, std::move(detail)});
    };

    // STAR
    bool star_ok = true;
    for (int s = 0; s < n && star_ok; ++s) {
        if (s == 0 && t.star[0] != 0) {
            add(Axiom::Star, {0, t.star[0], -1}, "1* = " + std::to_string(t.star[0]) + ", expected 1* = 1");
            star_ok = false;
        } else if (t.star[t.star[s]] != s) {
            add(Axiom::Star, {s, t.star[s], t.star[t.star[s]]},
                "s** != s for s = " + std::to_string(s));
            star_ok = false;
        }
    }
    for (int a = 0; a < n && star_ok; ++a)
        for (int b = 0; b < n && star_ok; ++b) {
            auto lhs = t.starred(t.at(a, b));
            auto rhs = t.at(t.star[b], t.star[a]);
            if (lhs != rhs) {
                add(Axiom::Star, {a, b, -1},
                    "(ab)* = " + lhs.to_string() + " but b*a* = " + rhs.to_string() + " for a,b = "
                        + std::to_string(a) + "," + std::to_string(b));
                star_ok = false;
            }
        }

    // H2, checked literally: s1 = {s}
    for (int s = 0; s < n; ++s)
        if (t.at(s, 0) != ElementSet::singleton(s)) {
            add(Axiom::H2, {s, 0, -1},
                "s1 = " + t.at(s, 0).to_string() + " for s = " + std::to_string(s));
            break;
        }

    // Left identity, reported separately from H2
    for (int s = 0; s < n; ++s)
        if (t.at(0, s) != ElementSet::singleton(s)) {
            add(Axiom::Unit, {0, s, -1},
                "1s = " + t.at(0, s).to_string() + " for s = " + std::to_string(s));
            break;
        }

    // H1
    [&] {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                auto pq = t.at(p, q);
                for (int r = 0; r < n; ++r) {
                    auto lhs = t.left(pq, r);
                    auto rhs = t.right(p, t.at(q, r));
                    if (lhs != rhs) {
                        add(Axiom::H1, {p, q, r},
                            "(pq)r = " + lhs.to_string() + " but p(qr) = " + rhs.to_string()
                                + " for p,q,r = " + triple(p, q, r));
                        return;
                    }
                }
            }
    }();

    // H3, together with its consequence 1 in s*s. Keep the smaller witness.
    std::optional<Violation> h3;
    [&] {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) {
                    if (!t.at(p, q).contains(r))
                        continue;
                    bool left_ok = t.at(t.star[p], r).contains(q);
                    bool right_ok = t.at(r, t.star[q]).contains(p);
                    if (!left_ok || !right_ok) {
                        std::string detail = "r in pq for p,q,r = " + triple(p, q, r) + " but "
                            + (left_ok ? std::string("p not in rq*") : std::string("q not in p*r"));
                        h3 = Violation{Axiom::H3, {p, q, r}, detail};
                        return;
                    }
                }
    }();
    for (int s = 0; s < n; ++s)
        if (!t.at(t.star[s], s).contains(0)) {
            std::array<int, 3> w{t.star[s], s, 0};
            if (!h3 || w < h3->witness)
                h3 = Violation{Axiom::H3, w, "1 not in s*s for s = " + std::to_string(s)};
            break;
        }
    if (h3)
        report.violations.push_back(*h3);

    report.valid = report.violations.empty();
    return report;
}

} // namespace

ValidationError::ValidationError(ValidationReport r)
    : Error(describe(r))
    , report(std::move(r))
{}

ValidationReport validate(const RawHypergroup& candidate)
{
    const int n = candidate.rank;
    if (n < 1 || n > kMaxRank)
        throw StructuralError("rank must be in 1.." + std::to_string(kMaxRank) + ", got " + std::to_string(n));
    if (static_cast<int>(candidate.star.size()) != n)
        throw StructuralError("star has " + std::to_string(candidate.star.size()) + " entries, expected "
                              + std::to_string(n));
    for (int s = 0; s < n; ++s)
        if (candidate.star[s] < 0 || candidate.star[s] >= n)
            throw StructuralError("star(" + std::to_string(s) + ") = " + std::to_string(candidate.star[s])
                                  + " out of range");
    if (candidate.products.size() != static_cast<std::size_t>(n) * n)
        throw StructuralError("table has " + std::to_string(candidate.products.size()) + " entries, expected "
                              + std::to_string(n * n));

    std::vector<ElementSet> table(n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const auto& entry = candidate.products[p * n + q];
            if (entry.empty())
                throw StructuralError("empty product at " + std::to_string(p) + " " + std::to_string(q));
            for (int m : entry) {
                if (m < 0 || m >= n)
                    throw StructuralError("member " + std::to_string(m) + " out of range at "
                                          + std::to_string(p) + " " + std::to_string(q));
                table[p * n + q].insert(m);
            }
        }
    return check_axioms(TableView{n, candidate.star, table});
}

ValidationReport validate(const FiniteHypergroup& h)
{
    std::vector<ElementSet> table(h.rank() * h.rank());
    for (int p = 0; p < h.rank(); ++p)
        for (int q = 0; q < h.rank(); ++q)
            table[p * h.rank() + q] = h.product(p, q);
    return check_axioms(TableView{h.rank(), h.star_map(), table});
}

FiniteHypergroup FiniteHypergroup::create(const RawHypergroup& raw)
{
    auto report = validate(raw);
    if (!report.valid)
        throw ValidationError(std::move(report));
    std::vector<ElementSet> table(raw.rank * raw.rank);
    for (std::size_t i = 0; i < table.size(); ++i)
        table[i] = ElementSet::from_members(raw.products[i]);
    return detail::make_trusted(raw.rank, raw.star, std::move(table));
}

FiniteHypergroup detail::make_trusted(int rank, std::vector<int> star, std::vector<ElementSet> table)
{
    auto data = std::make_shared<FiniteHypergroup::Data>();
    data->rank = rank;
    data->star = std::move(star);
    data->table = std::move(table);
    return FiniteHypergroup(std::move(data));
}

RawHypergroup FiniteHypergroup::to_raw() const
{
    RawHypergroup raw;
    raw.rank = rank();
    raw.star = star_map();
    raw.products.reserve(_data->table.size());
    for (auto s : _data->table)
        raw.products.push_back(s.members());
    return raw;
}

bool FiniteHypergroup::operator==(const FiniteHypergroup& other) const
{
    return _data == other._data
        || (rank() == other.rank() && star_map() == other.star_map() && _data->table == other._data->table);
}

ElementSet complex_product(const FiniteHypergroup& h, ElementSet p, ElementSet q)
{
    ElementSet out;
    p.for_each([&](int a) { q.for_each([&](int b) { out |= h.product(a, b); }); });
    return out;
}

ElementSet star_set(const FiniteHypergroup& h, ElementSet s)
{
    ElementSet out;
    s.for_each([&](int e) { out.insert(h.star(e)); });
    return out;
}

ElementSet closure(const FiniteHypergroup& h, ElementSet s)
{
    auto current = s | ElementSet::singleton(0);
    while (true) {
        auto starred = star_set(h, current);
        auto next = current | starred | complex_product(h, starred, current);
        if (next == current)
            return current;
        current = next;
    }
}

bool is_closed(const FiniteHypergroup& h, ElementSet s)
{
    return !s.empty() && complex_product(h, star_set(h, s), s).subset_of(s);
}

void require_closed(const FiniteHypergroup& h, ElementSet s, const char* what)
{
    if (!s.subset_of(h.elements()))
        throw PreconditionError(std::string(what) + ": " + s.to_string() + " is not a subset of the hypergroup");
    if (!is_closed(h, s))
        throw PreconditionError(std::string(what) + ": " + s.to_string() + " is not closed");
}

ElementSet SubHypergroup::to_local(ElementSet ambient) const
{
    ElementSet out;
    ambient.for_each([&](int e) {
        if (local_index[e] < 0)
            throw PreconditionError("element " + std::to_string(e) + " lies outside the sub-hypergroup");
        out.insert(local_index[e]);
    });
    return out;
}

ElementSet SubHypergroup::to_ambient(ElementSet local) const
{
    ElementSet out;
    local.for_each([&](int e) { out.insert(members[e]); });
    return out;
}

SubHypergroup sub_hypergroup(const FiniteHypergroup& h, ElementSet closed)
{
    require_closed(h, closed, "sub_hypergroup");
    SubHypergroup sub{h, closed.members(), std::vector<int>(h.rank(), -1)};
    const int m = static_cast<int>(sub.members.size());
    for (int i = 0; i < m; ++i)
        sub.local_index[sub.members[i]] = i;

    std::vector<int> star(m);
    std::vector<ElementSet> table(m * m);
    for (int i = 0; i < m; ++i) {
        star[i] = sub.local_index[h.star(sub.members[i])];
        for (int j = 0; j < m; ++j)
            table[i * m + j] = sub.to_local(h.product(sub.members[i], sub.members[j]));
    }
    sub.hypergroup = detail::make_trusted(m, std::move(star), std::move(table));
    return sub;
}

} // namespace hyperhall
