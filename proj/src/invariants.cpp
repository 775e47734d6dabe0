#include "hyperhall/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hyperhall {

namespace {

class Tally
{
public:
    explicit Tally(std::string name) { _check.name = std::move(name); }

    template <typename Describe>
    void instance(bool ok, Describe&& describe)
    {
        ++_check.instances;
        if (!ok && _check.violations++ == 0)
            _check.first_violation = describe();
    }

    void skip() { ++_check.skipped; }

    void not_applicable() { _check.applicable = false; }

    LemmaCheck done() { return std::move(_check); }

private:
    LemmaCheck _check;
};

/// Quotients H//D and their analyses, built on first use.
class QuotientCache
{
public:
    explicit QuotientCache(const Analysis& analysis)
        : _analysis(analysis)
        , _maps(analysis.lattice().size())
        , _analyses(analysis.lattice().size())
    {}

    const QuotientMap& map(int d)
    {
        if (!_maps[d])
            _maps[d].emplace(quotient(_analysis.hypergroup(), _analysis.lattice().subset(d)));
        return *_maps[d];
    }

    const Analysis& analysis(int d)
    {
        if (!_analyses[d])
            _analyses[d].emplace(Analysis::build(map(d).quotient, _analysis.lattice().options()));
        return *_analyses[d];
    }

private:
    const Analysis& _analysis;
    std::vector<std::optional<QuotientMap>> _maps;
    std::vector<std::optional<Analysis>> _analyses;
};

bool normalizes(const FiniteHypergroup& h, ElementSet d, ElementSet e)
{
    bool ok = true;
    d.for_each([&](int x) {
        auto hx = ElementSet::singleton(x);
        ok = ok && complex_product(h, e, hx).subset_of(complex_product(h, hx, e));
    });
    return ok;
}

std::string sets(std::initializer_list<std::pair<const char*, ElementSet>> named)
{
    std::string out;
    for (const auto& [label, s] : named) {
        if (!out.empty())
            out += ", ";
        out += std::string(label) + " = " + s.to_string();
    }
    return out;
}

} // namespace

std::vector<LemmaCheck> structural_lemmas(const Analysis& analysis, LemmaSuiteOptions options)
{
    const auto& h = analysis.hypergroup();
    const auto& lat = analysis.lattice();
    const int n = lat.size();
    const int top = lat.top();
    const bool rt = is_rt(analysis);
    QuotientCache cache(analysis);
    std::vector<LemmaCheck> out;

    auto iso = [&](const FiniteHypergroup& a, const FiniteHypergroup& b, Tally& t, auto describe) {
        if (std::max(a.rank(), b.rank()) > options.isomorphism.rank_cap) {
            t.skip();
            return;
        }
        auto phi = isomorphic(a, b, options.isomorphism);
        t.instance(phi && is_isomorphism(a, b, *phi), describe);
    };

    {
        Tally t("(ab)* = b*a*");
        for (int a = 0; a < h.rank(); ++a)
            for (int b = 0; b < h.rank(); ++b)
                t.instance(star_set(h, h.product(a, b)) == h.product(h.star(b), h.star(a)),
                           [&] { return "a = " + std::to_string(a) + ", b = " + std::to_string(b); });
        out.push_back(t.done());
    }
    {
        Tally t("strongly normal implies normal");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (lat.strongly_normal_in(i, j))
                    t.instance(lat.normal_in(i, j), [&] { return sets({{"E", lat.subset(i)}, {"F", lat.subset(j)}}); });
        out.push_back(t.done());
    }
    {
        Tally t("strongly normal iff thin quotient");
        for (int f = 0; f < n; ++f)
            t.instance(lat.strongly_normal_in(f, top) == is_thin(cache.map(f).quotient),
                       [&] { return sets({{"F", lat.subset(f)}}); });
        for (int f = 0; f < n; ++f)
            for (int g = f + 1; g < n; ++g)
                if (lat.includes(f, g))
                    t.instance(lat.strongly_normal_in(f, g) == analysis.step_thin(f, g),
                               [&] { return sets({{"F", lat.subset(f)}, {"G", lat.subset(g)}}); });
        out.push_back(t.done());
    }
    {
        Tally t("E strongly normal iff E//D strongly normal in H//D");
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e) {
                if (!lat.includes(d, e))
                    continue;
                const auto& q = cache.map(d);
                auto image = q.project(lat.subset(e));
                bool ok = is_closed(q.quotient, image)
                       && lat.strongly_normal_in(e, top)
                              == is_strongly_normal(q.quotient, image, q.quotient.elements());
                t.instance(ok, [&] { return sets({{"D", lat.subset(d)}, {"E", lat.subset(e)}}); });
            }
        out.push_back(t.done());
    }
    {
        Tally ti("closed subsets of RT are RT with dividing valency");
        Tally tii("H//D RT and n_{H//D} n_D = n_H for subnormal D");
        Tally tiii("n_{CD} n_{C∩D} = n_C n_D for C normal");
        Tally t8("D subnormal when C subnormal and D//C subnormal in H//C");
        if (rt) {
            const auto n_h = valency(analysis);
            std::vector<Valency> val(n, 0);
            for (int d = 0; d < n; ++d) {
                bool ok = true;
                try {
                    val[d] = valency_of(analysis, lat.subset(d));
                    ok = n_h % val[d] == 0;
                } catch (const ValencyUndefinedError&) {
                    ok = false;
                }
                ti.instance(ok, [&] { return sets({{"D", lat.subset(d)}}); });
            }
            for (int d = 0; d < n; ++d) {
                if (!lat.subnormal(d) || val[d] == 0)
                    continue;
                const auto& qa = cache.analysis(d);
                bool ok = is_rt(qa) && valency(qa) * val[d] == n_h;
                tii.instance(ok, [&] { return sets({{"D", lat.subset(d)}}); });
            }
            for (int c = 0; c < n; ++c) {
                if (!lat.normal_in(c, top) || val[c] == 0)
                    continue;
                for (int d = 0; d < n; ++d) {
                    auto cd = lat.find(complex_product(h, lat.subset(c), lat.subset(d)));
                    auto meet = lat.find(lat.subset(c) & lat.subset(d));
                    bool ok = cd && meet && val[d] != 0
                           && val[*cd] * val[*meet] == val[c] * val[d];
                    tiii.instance(ok, [&] { return sets({{"C", lat.subset(c)}, {"D", lat.subset(d)}}); });
                }
            }
            for (int c = 0; c < n; ++c) {
                if (!lat.subnormal(c))
                    continue;
                const auto& q = cache.map(c);
                const auto& qlat = cache.analysis(c).lattice();
                for (int d = 0; d < n; ++d) {
                    if (!lat.includes(c, d))
                        continue;
                    auto image = qlat.find(q.project(lat.subset(d)));
                    if (!image || !qlat.subnormal(*image))
                        continue;
                    t8.instance(lat.subnormal(d), [&] { return sets({{"C", lat.subset(c)}, {"D", lat.subset(d)}}); });
                }
            }
        } else {
            ti.not_applicable();
            tii.not_applicable();
            tiii.not_applicable();
            t8.not_applicable();
        }
        out.push_back(ti.done());
        out.push_back(tii.done());
        out.push_back(tiii.done());
        out.push_back(t8.done());
    }
    {
        Tally t("E -> E//D is a bijection onto closed subsets of H//D");
        for (int d = 0; d < n; ++d) {
            const auto& q = cache.map(d);
            const auto& qlat = cache.analysis(d).lattice();
            std::set<std::uint64_t> images;
            bool ok = true;
            std::string where;
            for (int e = 0; e < n && ok; ++e) {
                if (!lat.includes(d, e))
                    continue;
                auto image = q.project(lat.subset(e));
                if (!qlat.find(image) || q.unite(image) != lat.subset(e) || !images.insert(image.bits()).second) {
                    ok = false;
                    where = sets({{"D", lat.subset(d)}, {"E", lat.subset(e)}});
                }
            }
            if (ok && static_cast<int>(images.size()) != qlat.size()) {
                ok = false;
                where = sets({{"D", lat.subset(d)}}) + ": not onto";
            }
            t.instance(ok, [&] { return where; });
        }
        out.push_back(t.done());
    }
    {
        Tally t("(H//D)//(E//D) ≅ H//E for E normal");
        for (int e = 0; e < n; ++e) {
            if (!lat.normal_in(e, top))
                continue;
            for (int d = 0; d < n; ++d) {
                if (!lat.includes(d, e))
                    continue;
                const auto& qd = cache.map(d);
                auto image = qd.project(lat.subset(e));
                if (!is_closed(qd.quotient, image)) {
                    t.instance(false, [&] { return sets({{"D", lat.subset(d)}, {"E", lat.subset(e)}}); });
                    continue;
                }
                auto twice = quotient(qd.quotient, image);
                iso(twice.quotient, cache.map(e).quotient, t,
                    [&] { return sets({{"D", lat.subset(d)}, {"E", lat.subset(e)}}); });
            }
        }
        out.push_back(t.done());
    }
    {
        Tally t("ED//E ≅ D//(E∩D) when D normalizes E");
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e) {
                auto ds = lat.subset(d);
                auto es = lat.subset(e);
                if (!normalizes(h, ds, es))
                    continue;
                auto describe = [&] { return sets({{"D", ds}, {"E", es}}); };
                auto ed = complex_product(h, es, ds);
                if (!is_closed(h, ed)) {
                    t.instance(false, describe);
                    continue;
                }
                auto upper = relative_quotient(h, es, ed);
                auto lower = relative_quotient(h, es & ds, ds);
                iso(upper.map.quotient, lower.map.quotient, t, describe);
            }
        out.push_back(t.done());
    }
    {
        Tally t("h*h closed in thin T, strongly normal when h* normalizes T");
        const auto thin = thin_elements(h);
        for (int i = 0; i < n; ++i) {
            auto ts = lat.subset(i);
            if (!ts.subset_of(thin))
                continue;
            for (int x = 0; x < h.rank(); ++x) {
                auto hh = h.product(h.star(x), x);
                if (!hh.subset_of(ts))
                    continue;
                auto describe = [&] { return sets({{"T", ts}}) + ", h = " + std::to_string(x); };
                if (!is_closed(h, hh)) {
                    t.instance(false, describe);
                    continue;
                }
                if (normalizes(h, ElementSet::singleton(h.star(x)), ts))
                    t.instance(is_strongly_normal(h, hh, ts), describe);
                else
                    t.instance(true, describe);
            }
        }
        out.push_back(t.done());
    }
    {
        Tally t("ED subnormal for D subnormal, E normal");
        for (int e = 0; e < n; ++e) {
            if (!lat.normal_in(e, top))
                continue;
            for (int d = 0; d < n; ++d) {
                if (!lat.subnormal(d))
                    continue;
                auto ed = lat.find(complex_product(h, lat.subset(e), lat.subset(d)));
                t.instance(ed && lat.subnormal(*ed), [&] { return sets({{"D", lat.subset(d)}, {"E", lat.subset(e)}}); });
            }
        }
        out.push_back(t.done());
    }
    {
        Tally t("C∩F strongly normal in D∩F");
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                if (!lat.strongly_normal_in(c, d))
                    continue;
                for (int f = 0; f < n; ++f) {
                    auto cf = lat.find(lat.subset(c) & lat.subset(f));
                    auto df = lat.find(lat.subset(d) & lat.subset(f));
                    t.instance(cf && df && lat.strongly_normal_in(*cf, *df), [&] {
                        return sets({{"C", lat.subset(c)}, {"D", lat.subset(d)}, {"F", lat.subset(f)}});
                    });
                }
            }
        out.push_back(t.done());
    }
    {
        Tally t("EC strongly normal in ED for E normal");
        for (int e = 0; e < n; ++e) {
            if (!lat.normal_in(e, top))
                continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!lat.strongly_normal_in(c, d))
                        continue;
                    auto ec = lat.find(complex_product(h, lat.subset(e), lat.subset(c)));
                    auto ed = lat.find(complex_product(h, lat.subset(e), lat.subset(d)));
                    t.instance(ec && ed && lat.strongly_normal_in(*ec, *ed), [&] {
                        return sets({{"E", lat.subset(e)}, {"C", lat.subset(c)}, {"D", lat.subset(d)}});
                    });
                }
        }
        out.push_back(t.done());
    }
    return out;
}

std::vector<LemmaCheck> lemma_suite(const Analysis& analysis, const PrimePartition& sigma)
{
    const auto& lat = analysis.lattice();
    const int n = lat.size();
    const int top = lat.top();
    QuotientCache cache(analysis);
    const bool solvable = is_sigma_solvable(analysis, sigma);
    std::vector<LemmaCheck> out;

    {
        Tally t("closed subsets of a σ-solvable hypergroup are σ-solvable");
        if (solvable)
            for (int c = 0; c < n; ++c)
                t.instance(is_sigma_solvable(analysis, sigma, lat.subset(c)),
                           [&] { return "C = " + lat.subset(c).to_string(); });
        else
            t.not_applicable();
        out.push_back(t.done());
    }
    {
        Tally normal("H//E σ-solvable for E normal");
        Tally subnormal("H//D σ-solvable for D subnormal");
        if (solvable) {
            for (int d = 0; d < n; ++d) {
                if (!lat.subnormal(d))
                    continue;
                bool ok = is_sigma_solvable(cache.analysis(d), sigma);
                auto describe = [&] { return "D = " + lat.subset(d).to_string(); };
                subnormal.instance(ok, describe);
                if (lat.normal_in(d, top))
                    normal.instance(ok, describe);
            }
        } else {
            normal.not_applicable();
            subnormal.not_applicable();
        }
        out.push_back(normal.done());
        out.push_back(subnormal.done());
    }
    {
        Tally t("E and H//E σ-solvable imply H σ-solvable");
        for (int e = 0; e < n; ++e) {
            if (!is_sigma_solvable(analysis, sigma, lat.subset(e)) || !is_sigma_solvable(cache.analysis(e), sigma))
                continue;
            t.instance(solvable, [&] { return "E = " + lat.subset(e).to_string(); });
        }
        out.push_back(t.done());
    }
    {
        Tally t("RT and σ-solvable under the smallest partition iff solvable");
        bool lhs = is_rt(analysis) && is_sigma_solvable(analysis, PrimePartition::smallest());
        bool rhs = solvable_chain(analysis).has_value();
        t.instance(lhs == rhs, [&] {
            return std::string("RT+σ-solvable = ") + (lhs ? "yes" : "no") + ", solvable = " + (rhs ? "yes" : "no");
        });
        out.push_back(t.done());
    }
    return out;
}

LemmaCheck thin_criterion(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    Tally t("no nontrivial subnormal Π-subset and Π-number h*h imply thin");
    const auto& lat = analysis.lattice();
    const auto& h = analysis.hypergroup();
    if (!is_rt(analysis)) {
        t.not_applicable();
        return t.done();
    }
    for (int c = 1; c < lat.size(); ++c)
        if (lat.subnormal(c) && is_pi_number(valency_of(analysis, lat.subset(c)), sigma, pi))
            return t.done();
    const auto thin = thin_elements(h);
    for (int x = 0; x < h.rank(); ++x) {
        auto hh = h.product(h.star(x), x);
        if (hh.subset_of(thin) && !is_pi_number(static_cast<std::uint64_t>(hh.size()), sigma, pi))
            return t.done();
    }
    t.instance(is_thin(h), [] { return std::string("antecedent holds but H is not thin"); });
    return t.done();
}

bool all_passed(const std::vector<LemmaCheck>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
}

} // namespace hyperhall
