// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hyperhall/hall.hpp"
#include "hyperhall/invariants.hpp"
#include "hyperhall/quotient.hpp"
#include "oracle/groups.hpp"

using namespace hyperhall;

namespace {

/// Collects failures; a criterion passes when none were recorded.
struct Outcome
{
    std::vector<std::string> failures;
    std::string summary;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

struct Criterion
{
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

// Every fixture, A5 included.
const std::vector<fixtures::Fixture>& corpus()
{
    static const auto all = fixtures::corpus(60);
    return all;
}

constexpr int kCap = 60;

Analysis analyze(const FiniteHypergroup& h)
{
    return Analysis::build(h, {kCap});
}

const oracle::Group& oracle_group(const std::string& name)
{
    static const auto groups = oracle::small_groups();
    for (const auto& g : groups)
        if (g.name == name)
            return g;
    throw PreconditionError("no oracle group named " + name);
}

std::vector<std::set<int>> prime_subsets(int order)
{
    auto primes = oracle::primes_of(order);
    std::vector<std::set<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
        std::set<int> s;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1)
                s.insert(primes[i]);
        out.push_back(s);
    }
    return out;
}

PiSelection selection(const std::set<int>& primes)
{
    std::set<std::size_t> indices;
    for (int p : primes)
        indices.insert(PrimePartition::smallest().class_index(static_cast<std::uint64_t>(p)));
    return PiSelection::of(indices);
}

std::string describe(const std::set<int>& primes)
{
    std::string s = "{";
    for (int p : primes)
        s += (s.size() > 1 ? "," : "") + std::to_string(p);
    return s + "}";
}

void criterion1(Outcome& o)
{
    for (const auto* file : {"groups/c2.cayley", "k2.hg", "groups/s3.cayley", "groups/d4.cayley", "groups/q8.cayley",
                             "groups/a4.cayley", "groups/s4.cayley"}) {
        auto h = fixtures::hypergroup(file);
        o.require(validate(h).valid, std::string(file) + " rejected");
    }
    // Flip one value in each cell of K2's table.
    const RawHypergroup k2{2, {0, 1}, {{0}, {1}, {1}, {0, 1}}};
    const std::vector<std::pair<std::vector<int>, Axiom>> flips{
        {{1}, Axiom::H2}, {{0}, Axiom::Unit}, {{0}, Axiom::H2}, {{1}, Axiom::H3}};
    for (std::size_t cell = 0; cell < flips.size(); ++cell) {
        auto raw = k2;
        raw.products[cell] = flips[cell].first;
        auto report = validate(raw);
        o.require(!report.valid, "mutation of cell " + std::to_string(cell) + " accepted");
        o.require(report.violates(flips[cell].second), "mutation of cell " + std::to_string(cell)
                                                            + " not reported as " + to_string(flips[cell].second));
    }
    o.summary = "7 fixtures accepted, 4 mutations rejected";
}

void criterion2(Outcome& o)
{
    int groups = 0;
    for (const auto& f : corpus()) {
        if (!f.group || f.doc.hypergroup.rank() > 24)
            continue;
        auto n = valency(analyze(f.doc.hypergroup));
        o.require(n == static_cast<Valency>(oracle_group(f.doc.name).order), f.path + ": valency " + std::to_string(n));
        ++groups;
    }
    o.summary = std::to_string(groups) + " groups";
}

void criterion3(Outcome& o)
{
    auto a = Analysis::build(fixtures::hypergroup("k2.hg"));
    o.require(!is_rt(a), "K2 reported RT");
    bool threw = false;
    try {
        valency(a);
    } catch (const ValencyUndefinedError&) {
        threw = true;
    }
    o.require(threw, "valency(K2) did not raise");
}

void criterion4(Outcome& o)
{
    auto s3 = fixtures::hypergroup("groups/s3.cayley");
    auto k2 = fixtures::hypergroup("k2.hg");
    auto c2 = fixtures::hypergroup("groups/c2.cayley");
    // Index 3 is a transposition; {0,1,2} is A3.
    auto t = closure(s3, {3});
    o.require(t == ElementSet{0, 3}, "closure of a transposition is " + t.to_string());
    auto phi = isomorphic(quotient(s3, t).quotient, k2);
    o.require(phi && is_isomorphism(quotient(s3, t).quotient, k2, *phi), "S3//<(12)> not isomorphic to K2");
    auto psi = isomorphic(quotient(s3, {0, 1, 2}).quotient, c2);
    o.require(psi && is_isomorphism(quotient(s3, {0, 1, 2}).quotient, c2, *psi), "S3//A3 not isomorphic to C2");
    if (phi) {
        std::string w;
        for (int x : *phi)
            w += std::to_string(x);
        o.summary = "witness " + w;
    }
}

void criterion5(Outcome& o)
{
    int rt = 0;
    std::size_t chains_seen = 0;
    for (const auto& f : corpus()) {
        auto a = analyze(f.doc.hypergroup);
        if (!is_rt(a))
            continue;
        ++rt;
        auto chains = all_rt_chains(a, 100);
        chains_seen += chains.size();
        o.require(!chains.empty(), f.path + ": RT without chains");
        for (const auto& c : chains)
            o.require(c.order_product() == valency(a), f.path + ": chain product " + std::to_string(c.order_product())
                                                           + " vs " + std::to_string(valency(a)));
    }
    o.summary = std::to_string(rt) + " RT fixtures, " + std::to_string(chains_seen) + " chains";
}

void criterion6(Outcome& o)
{
    int fixtures_checked = 0;
    std::size_t instances = 0;
    for (const auto& f : corpus()) {
        if (f.doc.hypergroup.rank() > 8)
            continue;
        ++fixtures_checked;
        auto a = analyze(f.doc.hypergroup);
        for (const auto& c : structural_lemmas(a)) {
            instances += c.instances;
            o.require(c.passed(), f.path + ": " + c.name + ": " + c.first_violation);
            o.require(c.skipped == 0, f.path + ": " + c.name + ": " + std::to_string(c.skipped) + " skipped");
        }
    }
    o.summary = std::to_string(fixtures_checked) + " fixtures, " + std::to_string(instances) + " instances";
}

/// Chain of normal steps with thin prime-order quotients, searched with plain quotients.
bool solvable_by_definition(const FiniteHypergroup& h)
{
    auto lattice = closed_subsets(h, {kCap});
    const int n = lattice.size();
    std::vector<int> memo(static_cast<std::size_t>(n), -1);
    std::function<bool(int)> reaches_top = [&](int i) -> bool {
        if (i == lattice.top())
            return true;
        if (memo[i] >= 0)
            return memo[i];
        bool ok = false;
        for (int j = 0; j < n && !ok; ++j) {
            auto f = lattice.subset(i);
            auto g = lattice.subset(j);
            if (f == g || !f.subset_of(g) || !is_normal(h, f, g))
                continue;
            auto q = relative_quotient(h, f, g).map.quotient;
            ok = is_thin(q) && is_prime(static_cast<std::uint64_t>(q.rank())) && reaches_top(j);
        }
        memo[i] = ok;
        return ok;
    };
    return reaches_top(lattice.bottom());
}

void criterion7(Outcome& o)
{
    int rt = 0, solvable = 0;
    for (const auto& f : corpus()) {
        auto a = analyze(f.doc.hypergroup);
        if (!is_rt(a))
            continue;
        ++rt;
        bool sigma = is_sigma_solvable(a, PrimePartition::smallest());
        bool direct = solvable_by_definition(f.doc.hypergroup);
        solvable += direct;
        o.require(sigma == direct, f.path + ": σ-solvable " + std::to_string(sigma) + ", solvable "
                                       + std::to_string(direct));
    }
    o.summary = std::to_string(rt) + " RT fixtures, " + std::to_string(solvable) + " solvable";
}

void criterion8(Outcome& o)
{
    const auto sigma = PrimePartition::smallest();
    int groups = 0, selections = 0;
    for (const auto& f : corpus()) {
        if (!f.group || f.doc.hypergroup.rank() > 24)
            continue;
        const auto& g = oracle_group(f.doc.name);
        if (!oracle::is_solvable(g))
            continue;
        ++groups;
        auto a = analyze(f.doc.hypergroup);
        for (const auto& primes : prime_subsets(g.order)) {
            ++selections;
            auto pi = selection(primes);
            auto where = f.path + " Π=" + describe(primes);

            std::vector<ElementSet> expected;
            for (auto m : oracle::hall_subgroups(g, primes))
                expected.push_back(ElementSet(m));
            auto report = verify_theorem(a, sigma, pi);
            o.require(report.flags.all(), where + ": hypotheses not all met");
            o.require(report.hall_subsets == expected, where + ": Hall subsets differ from the oracle");

            // (i)
            o.require(!report.hall_subsets.empty(), where + ": no Hall subset");
            o.require(report.constructive.has_value(), where + ": constructive failed: " + report.constructive_error);
            if (report.constructive)
                o.require(std::find(report.hall_subsets.begin(), report.hall_subsets.end(), *report.constructive)
                              != report.hall_subsets.end(),
                          where + ": constructive output not enumerated");
            // (ii)
            o.require(report.conjugate == true, where + ": a pair is not conjugate");
            for (const auto& w : report.conjugacy) {
                o.require(w.element.has_value(), where + ": missing conjugacy witness");
                o.require(oracle::conjugate_in(g, report.hall_subsets[w.first].bits(),
                                               report.hall_subsets[w.second].bits()),
                          where + ": oracle disagrees on conjugacy");
            }
            o.require(witnesses_verify(a, report), where + ": witnesses do not recheck");
            // (iii)
            std::size_t pi_subgroups = 0;
            for (auto m : oracle::subgroups(g))
                pi_subgroups += oracle::is_pi_number(oracle::popcount(m), primes);
            o.require(report.containment.size() == pi_subgroups, where + ": closed Π-subset count differs");
            o.require(report.contained == true, where + ": a closed Π-subset lies in no Hall subset");
        }
    }
    o.summary = std::to_string(groups) + " groups, " + std::to_string(selections) + " (group, Π) pairs";
}

void criterion9(Outcome& o)
{
    auto a = analyze(fixtures::hypergroup("groups/a5.cayley"));
    auto sigma = PrimePartition::smallest();
    auto pi = PiSelection::parse("{2},{5}", sigma);
    o.require(!is_sigma_solvable(a, sigma), "A5 reported σ-solvable");
    o.require(hall_subsets_enumerated(a, sigma, pi).empty(), "A5 has a Hall {2,5}-subset");
    int order20 = 0;
    for (auto s : a.lattice().subsets())
        order20 += s.size() == 20;
    o.require(order20 == 0, "A5 has a closed subset of order 20");
    o.summary = std::to_string(a.lattice().size()) + " closed subsets";
}

void criterion10(Outcome& o)
{
    const auto sigma = PrimePartition::smallest();
    int cases = 0;
    for (const auto& f : corpus()) {
        auto a = analyze(f.doc.hypergroup);
        if (!is_rt(a))
            continue;
        const auto& l = a.lattice();
        for (const auto& primes : prime_subsets(static_cast<int>(valency(a)))) {
            auto pi = selection(primes);
            if (!is_pi_valenced(a, sigma, pi).valenced)
                continue;
            ++cases;
            auto where = f.path + " Π=" + describe(primes);
            ElementSet r;
            try {
                r = pi_radical(a, sigma, pi);
            } catch (const HypothesisError& e) {
                o.require(false, where + ": " + e.what());
                continue;
            }
            for (auto t : closed_pi_subsets(a, sigma, pi))
                if (l.subnormal(l.index_of(t)))
                    o.require(t.subset_of(r), where + ": " + t.to_string() + " not in the radical");
            o.require(l.strongly_normal_in(l.index_of(r), l.top()), where + ": radical not strongly normal");
            o.require(is_thin(quotient(f.doc.hypergroup, r).quotient), where + ": quotient not thin");
        }
    }
    o.summary = std::to_string(cases) + " (fixture, Π) pairs";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "axiom validator on fixtures and K2 mutations", 1, criterion1},
        {2, "valency equals group order for groups of order <= 24", 10, criterion2},
        {3, "K2 is not RT and has no valency", 1, criterion3},
        {4, "S3 quotients by <(12)> and A3 are K2 and C2", 1, criterion4},
        {5, "every RT chain gives the same valency", 30, criterion5},
        {6, "structural lemma suite on fixtures of rank <= 8", 60, criterion6},
        {7, "σ-solvable under the smallest partition iff solvable", 30, criterion7},
        {8, "Hall existence, conjugacy and containment for solvable groups <= 24", 120, criterion8},
        {9, "A5 with Π = {2},{5}: not σ-solvable, no Hall subset", 60, criterion9},
        {10, "Π-radical contains subnormal Π-subsets, strongly normal, thin quotient", 60, criterion10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds)
            o.failures.push_back("took " + std::to_string(seconds) + " s");
        bool pass = o.failures.empty();
        failed += !pass;
        std::printf("[%s] criterion %d: %s (%.3f s, limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), seconds, c.limit_seconds, o.summary.empty() ? "" : "; ",
                    o.summary.c_str());
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i)
            std::printf("    %s\n", o.failures[i].c_str());
        if (o.failures.size() > 10)
            std::printf("    ... %zu more\n", o.failures.size() - 10);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
