#include "hyperhall/hall.hpp"

#include <algorithm>

#include "hyperhall/quotient.hpp"

namespace hyperhall {

namespace {

StepPredicate sigma_step(const Analysis& analysis, const PrimePartition& sigma)
{
    return [&analysis, &sigma](int f, int g) {
        return analysis.step_thin(f, g) && sigma.is_sigma_number(static_cast<std::uint64_t>(analysis.step_order(f, g)));
    };
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

} // namespace

std::optional<Chain> sigma_solvable_chain(const Analysis& analysis, const PrimePartition& sigma)
{
    auto path = search_chain(analysis, analysis.lattice().top(), sigma_step(analysis, sigma));
    if (!path)
        return std::nullopt;
    return make_chain(analysis, *path);
}

bool is_sigma_solvable(const Analysis& analysis, const PrimePartition& sigma)
{
    return search_chain(analysis, analysis.lattice().top(), sigma_step(analysis, sigma)).has_value();
}

bool is_sigma_solvable(const Analysis& analysis, const PrimePartition& sigma, ElementSet c)
{
    return search_chain(analysis, analysis.lattice().index_of(c), sigma_step(analysis, sigma)).has_value();
}

std::optional<Chain> solvable_chain(const Analysis& analysis)
{
    auto path = search_chain(analysis, analysis.lattice().top(), [&](int f, int g) {
        return analysis.step_thin(f, g) && is_prime(static_cast<std::uint64_t>(analysis.step_order(f, g)));
    });
    if (!path)
        return std::nullopt;
    return make_chain(analysis, *path);
}

PiValencedResult is_pi_valenced(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    const auto& lattice = analysis.lattice();
    const auto& h = analysis.hypergroup();
    if (!is_rt(analysis))
        throw ValencyUndefinedError("is_pi_valenced: hypergroup is not residually thin");

    PiValencedResult result;
    for (int u = 0; u < lattice.size(); ++u) {
        if (!lattice.subnormal(u) || !is_pi_number(valency_of(analysis, lattice.subset(u)), sigma, pi))
            continue;
        auto q = quotient(h, lattice.subset(u));
        auto thin = thin_elements(q.quotient);
        std::optional<Analysis> quotient_analysis;
        for (int b = 0; b < q.quotient.rank(); ++b) {
            auto s = q.quotient.product(q.quotient.star(b), b);
            ++result.conditions_checked;
            if (!s.subset_of(thin))
                continue;
            auto cardinality = static_cast<std::uint64_t>(s.size());
            if (is_closed(q.quotient, s)) {
                if (!quotient_analysis)
                    quotient_analysis.emplace(Analysis::build(q.quotient, lattice.options()));
                auto n = valency_of(*quotient_analysis, s);
                if (n != cardinality)
                    result.valency_mismatches.push_back("U = " + lattice.subset(u).to_string() + ", h = "
                                                        + std::to_string(q.blocks[b].first()) + ": valency "
                                                        + std::to_string(n) + " but |S| = " + std::to_string(cardinality));
            }
            if (!is_pi_number(cardinality, sigma, pi) && result.valenced) {
                result.valenced = false;
                result.counterexample = std::make_pair(lattice.subset(u), q.blocks[b].first());
            }
        }
    }
    return result;
}

std::vector<ElementSet> closed_pi_subsets(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    std::vector<ElementSet> out;
    for (auto c : analysis.lattice().subsets())
        if (is_pi_number(valency_of(analysis, c), sigma, pi))
            out.push_back(c);
    return out;
}

ElementSet pi_radical(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    const auto& lattice = analysis.lattice();
    std::vector<int> candidates;
    for (int i = 0; i < lattice.size(); ++i)
        if (lattice.subnormal(i) && is_pi_number(valency_of(analysis, lattice.subset(i)), sigma, pi))
            candidates.push_back(i);

    std::vector<int> maximal;
    for (int c : candidates)
        if (std::none_of(candidates.begin(), candidates.end(), [&](int d) { return d != c && lattice.includes(c, d); }))
            maximal.push_back(c);
    if (maximal.size() != 1) {
        std::vector<std::string> listed;
        for (int m : maximal)
            listed.push_back(lattice.subset(m).to_string());
        throw HypothesisError("pi_radical: " + std::to_string(maximal.size())
                              + " maximal subnormal closed Π-subsets: " + join(listed, ", "));
    }

    const int u = maximal.front();
    const auto radical = lattice.subset(u);
    std::vector<std::string> broken;
    for (int c : candidates)
        if (!lattice.includes(c, u)) {
            broken.push_back("does not contain subnormal Π-subset " + lattice.subset(c).to_string());
            break;
        }
    if (!lattice.strongly_normal_in(u, lattice.top()))
        broken.push_back("not strongly normal");
    if (!is_thin(quotient(analysis.hypergroup(), radical).quotient))
        broken.push_back("quotient by it is not thin");
    if (!broken.empty())
        throw HypothesisError("pi_radical: candidate " + radical.to_string() + " " + join(broken, "; "));
    return radical;
}

std::vector<ElementSet> hall_subsets_enumerated(const Analysis& analysis, const PrimePartition& sigma,
                                                const PiSelection& pi)
{
    const auto n_h = valency(analysis);
    const auto pi_prime = pi.complement();
    std::vector<ElementSet> out;
    for (auto c : analysis.lattice().subsets()) {
        auto n_c = valency_of(analysis, c);
        if (n_h % n_c != 0)
            throw InternalError("valency of " + c.to_string() + " does not divide the valency of the hypergroup");
        if (is_pi_number(n_c, sigma, pi) && is_pi_number(n_h / n_c, sigma, pi_prime))
            out.push_back(c);
    }
    return out;
}

ElementSet hall_subset_constructive(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    std::vector<std::string> missing;
    const bool rt = is_rt(analysis);
    if (!rt)
        missing.push_back("not residually thin");
    else {
        if (!is_sigma_solvable(analysis, sigma))
            missing.push_back("not σ-solvable");
        if (!is_pi_valenced(analysis, sigma, pi).valenced)
            missing.push_back("not Π-valenced");
    }
    if (!missing.empty())
        throw HypothesisError("hall_subset_constructive: " + join(missing, "; "));

    const auto radical = pi_radical(analysis, sigma, pi);
    const auto map = quotient(analysis.hypergroup(), radical);
    if (!is_thin(map.quotient))
        throw TheoremViolation("quotient by the Π-radical is not thin");

    // H//O is a group: every closed subset is a subgroup and its valency is its order.
    const auto group = ClosedSubsetLattice::build(map.quotient, analysis.lattice().options());
    const auto order = static_cast<std::uint64_t>(map.quotient.rank());
    const auto pi_prime = pi.complement();
    for (auto sub : group.subsets()) {
        auto k = static_cast<std::uint64_t>(sub.size());
        if (!is_pi_number(k, sigma, pi) || !is_pi_number(order / k, sigma, pi_prime))
            continue;
        auto lifted = lift(map, sub);
        auto n_t = valency_of(analysis, lifted);
        auto n_h = valency(analysis);
        if (!is_pi_number(n_t, sigma, pi) || n_h % n_t != 0 || !is_pi_number(n_h / n_t, sigma, pi_prime))
            throw TheoremViolation("lift " + lifted.to_string() + " of a Hall Π-subgroup is not a Hall Π-subset");
        return lifted;
    }
    throw TheoremViolation("H//O_Π(H) has no Hall Π-subgroup");
}

bool conjugates_by(const FiniteHypergroup& h, ElementSet s, ElementSet t, int x)
{
    auto left = ElementSet::singleton(x);
    auto right = ElementSet::singleton(h.star(x));
    return complex_product(h, left, complex_product(h, s, right)).subset_of(t)
        && complex_product(h, right, complex_product(h, t, left)).subset_of(s);
}

std::optional<int> are_conjugate(const FiniteHypergroup& h, ElementSet s, ElementSet t)
{
    for (int x = 0; x < h.rank(); ++x)
        if (conjugates_by(h, s, t, x))
            return x;
    return std::nullopt;
}

HallReport verify_theorem(const Analysis& analysis, const PrimePartition& sigma, const PiSelection& pi)
{
    HallReport report;
    report.flags.is_rt = is_rt(analysis);
    report.flags.is_sigma_solvable = is_sigma_solvable(analysis, sigma);
    if (!report.flags.is_rt)
        return report;

    report.valenced_detail = is_pi_valenced(analysis, sigma, pi);
    report.flags.is_pi_valenced = report.valenced_detail->valenced;

    try {
        report.radical = pi_radical(analysis, sigma, pi);
    } catch (const Error& e) {
        report.radical_error = e.what();
    }

    report.hall_subsets = hall_subsets_enumerated(analysis, sigma, pi);
    if (report.flags.all()) {
        try {
            report.constructive = hall_subset_constructive(analysis, sigma, pi);
        } catch (const Error& e) {
            report.constructive_error = e.what();
        }
    }

    const auto& halls = report.hall_subsets;
    bool existence = !halls.empty();
    if (report.flags.all())
        existence = existence && report.constructive
                 && std::find(halls.begin(), halls.end(), *report.constructive) != halls.end();
    report.existence = existence;

    bool all_conjugate = true;
    for (int i = 0; i < static_cast<int>(halls.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(halls.size()); ++j) {
            auto w = are_conjugate(analysis.hypergroup(), halls[i], halls[j]);
            all_conjugate = all_conjugate && w.has_value();
            report.conjugacy.push_back({i, j, w});
        }
    report.conjugate = all_conjugate;

    bool all_contained = true;
    for (auto c : closed_pi_subsets(analysis, sigma, pi)) {
        std::optional<int> home;
        for (int i = 0; i < static_cast<int>(halls.size()) && !home; ++i)
            if (c.subset_of(halls[i]))
                home = i;
        all_contained = all_contained && home.has_value();
        report.containment.push_back({c, home});
    }
    report.contained = all_contained;
    return report;
}

bool witnesses_verify(const Analysis& analysis, const HallReport& report)
{
    const auto& h = analysis.hypergroup();
    for (const auto& w : report.conjugacy) {
        if (!w.element)
            continue;
        if (!conjugates_by(h, report.hall_subsets[w.first], report.hall_subsets[w.second], *w.element))
            return false;
    }
    for (const auto& c : report.containment)
        if (c.hall_index && !c.pi_subset.subset_of(report.hall_subsets[*c.hall_index]))
            return false;
    return true;
}

} // namespace hyperhall
