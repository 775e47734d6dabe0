#include "hyperhall/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

#include "hyperhall/hall.hpp"
#include "hyperhall/invariants.hpp"
#include "hyperhall/io.hpp"
#include "hyperhall/quotient.hpp"

namespace hyperhall {

namespace {

using json = nlohmann::json; // std::map-backed objects, so keys come out sorted

struct Options
{
    std::string file;
    std::string generators;
    std::string sigma = "smallest";
    std::string pi;
    bool constructive = false;
    bool enumerate = false;
    std::string from;
    int rank_cap = kDefaultRankCap;
    bool machine = false;
};

json members(ElementSet s)
{
    return s.members();
}

json members(const std::vector<ElementSet>& sets)
{
    auto out = json::array();
    for (auto s : sets)
        out.push_back(members(s));
    return out;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

void emit(std::ostream& out, const json& report)
{
    out << report.dump(2) << '\n';
}

HypergroupDocument load(const Options& o)
{
    auto text = read_file(o.file);
    if (o.from.empty())
        return parse_any(text);
    if (o.from == "cayley")
        return cayley_to_hypergroup(text);
    if (o.from == "scheme")
        return scheme_to_hypergroup(text);
    if (o.from == "native")
        return parse_hypergroup(text);
    throw ParseError("unknown --from format '" + o.from + "'");
}

json violation_json(const Violation& v)
{
    return {{"axiom", to_string(v.axiom)},
            {"witness", std::vector<int>(v.witness.begin(), v.witness.end())},
            {"detail", v.detail}};
}

std::string witness_text(const Violation& v)
{
    std::string s = "(";
    for (int i = 0; i < 3 && v.witness[i] >= 0; ++i)
        s += (i ? "," : "") + std::to_string(v.witness[i]);
    return s + ")";
}

int cmd_validate(const Options& o, std::ostream& out)
{
    ValidationReport report;
    std::string name;
    try {
        auto doc = load(o);
        name = doc.name;
    } catch (const ValidationError& e) {
        report = e.report;
    }
    if (o.machine) {
        json j = {{"file", o.file}, {"valid", report.valid}, {"violations", json::array()}};
        for (const auto& v : report.violations)
            j["violations"].push_back(violation_json(v));
        emit(out, j);
    } else {
        out << o.file << ": " << (report.valid ? "valid" : "invalid") << '\n';
        for (const auto& v : report.violations)
            out << "  " << to_string(v.axiom) << " witness " << witness_text(v) << ": " << v.detail << '\n';
    }
    return report.valid ? kExitOk : kExitCheckFailed;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    auto doc = load(o);
    const auto& h = doc.hypergroup;
    auto analysis = Analysis::build(h, {o.rank_cap});
    const auto& lattice = analysis.lattice();
    auto thin = thin_elements(h);
    bool rt = is_rt(analysis);
    std::optional<Valency> n;
    if (rt)
        n = valency(analysis);

    if (o.machine) {
        json j = {{"name", doc.name},
                  {"rank", h.rank()},
                  {"thin_elements", members(thin)},
                  {"thin_count", thin.size()},
                  {"closed_subsets", lattice.size()},
                  {"rt", rt},
                  {"valency", n ? json(*n) : json(nullptr)},
                  {"normal_pairs", lattice.normal_pair_count()},
                  {"strongly_normal_pairs", lattice.strongly_normal_pair_count()}};
        emit(out, j);
        return kExitOk;
    }
    out << "name: " << doc.name << '\n';
    out << "rank: " << h.rank() << '\n';
    out << "thin elements: " << thin.size() << ' ' << thin << '\n';
    out << "closed subsets: " << lattice.size() << '\n';
    out << "RT: " << yes_no(rt) << '\n';
    out << "valency: " << (n ? std::to_string(*n) : std::string("undefined")) << '\n';
    out << "normal pairs: " << lattice.normal_pair_count() << '\n';
    out << "strongly normal pairs: " << lattice.strongly_normal_pair_count() << '\n';
    return kExitOk;
}

ElementSet parse_generators(const std::string& text, int rank)
{
    ElementSet gens;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        int g = -1;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), g);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("generator '" + token + "' is not an integer");
        if (g < 0 || g >= rank)
            throw PreconditionError("generator " + std::to_string(g) + " out of range for rank "
                                    + std::to_string(rank));
        gens.insert(g);
    }
    return gens;
}

int cmd_quotient(const Options& o, std::ostream& out)
{
    auto doc = load(o);
    auto f = closure(doc.hypergroup, parse_generators(o.generators, doc.hypergroup.rank()));
    auto q = quotient(doc.hypergroup, f);
    auto name = doc.name + "_quotient";
    std::string source = "quotient of " + doc.name + " by " + f.to_string();
    out << serialize_hypergroup(q.quotient, name, source);
    return kExitOk;
}

struct SigmaPi
{
    PrimePartition sigma;
    PiSelection pi;
};

SigmaPi parse_sigma_pi(const Options& o)
{
    auto sigma = PrimePartition::parse(o.sigma);
    if (o.pi.empty())
        throw ParseError("--pi is required");
    auto pi = PiSelection::parse(o.pi, sigma);
    return {sigma, pi};
}

json flags_json(const HypothesisFlags& f, bool rt_known)
{
    json j = {{"is_rt", f.is_rt}, {"is_sigma_solvable", f.is_sigma_solvable}};
    j["is_pi_valenced"] = rt_known && f.is_rt ? json(f.is_pi_valenced) : json(nullptr);
    return j;
}

void print_flags(std::ostream& out, const HypothesisFlags& f)
{
    out << "is_rt: " << yes_no(f.is_rt) << '\n';
    out << "is_sigma_solvable: " << yes_no(f.is_sigma_solvable) << '\n';
    out << "is_pi_valenced: " << (f.is_rt ? yes_no(f.is_pi_valenced) : "undefined") << '\n';
}

HypothesisFlags hypotheses(const Analysis& analysis, const SigmaPi& sp)
{
    HypothesisFlags f;
    f.is_rt = is_rt(analysis);
    f.is_sigma_solvable = is_sigma_solvable(analysis, sp.sigma);
    if (f.is_rt)
        f.is_pi_valenced = is_pi_valenced(analysis, sp.sigma, sp.pi).valenced;
    return f;
}

int cmd_hall(const Options& o, std::ostream& out)
{
    auto sp = parse_sigma_pi(o);
    auto doc = load(o);
    auto analysis = Analysis::build(doc.hypergroup, {o.rank_cap});
    auto flags = hypotheses(analysis, sp);

    std::optional<ElementSet> radical;
    std::string radical_note = "undefined (not RT)";
    std::vector<ElementSet> halls;
    std::string note;
    if (flags.is_rt) {
        try {
            radical = pi_radical(analysis, sp.sigma, sp.pi);
        } catch (const HypothesisError& e) {
            radical_note = e.what();
        }
        if (o.constructive) {
            try {
                halls.push_back(hall_subset_constructive(analysis, sp.sigma, sp.pi));
            } catch (const HypothesisError& e) {
                note = e.what();
            }
        } else {
            halls = hall_subsets_enumerated(analysis, sp.sigma, sp.pi);
        }
    } else {
        note = "Hall subsets undefined: hypergroup is not residually thin";
    }

    if (o.machine) {
        json j = {{"name", doc.name},
                  {"sigma", sp.sigma.to_string()},
                  {"pi", sp.pi.to_string(sp.sigma)},
                  {"mode", o.constructive ? "constructive" : "enumerate"},
                  {"flags", flags_json(flags, true)},
                  {"radical", radical ? members(*radical) : json(nullptr)},
                  {"hall_subsets", members(halls)},
                  {"note", note}};
        emit(out, j);
    } else {
        out << "sigma: " << sp.sigma.to_string() << '\n';
        out << "pi: " << sp.pi.to_string(sp.sigma) << '\n';
        print_flags(out, flags);
        out << "radical: " << (radical ? radical->to_string() : radical_note) << '\n';
        out << "Hall subsets: " << halls.size() << '\n';
        for (auto c : halls)
            out << "  " << c << '\n';
        if (!note.empty())
            out << note << '\n';
    }
    return halls.empty() ? kExitCheckFailed : kExitOk;
}

int cmd_radical(const Options& o, std::ostream& out)
{
    auto sp = parse_sigma_pi(o);
    auto doc = load(o);
    auto analysis = Analysis::build(doc.hypergroup, {o.rank_cap});
    std::optional<ElementSet> radical;
    std::string note;
    if (!is_rt(analysis)) {
        note = "undefined (not RT)";
    } else {
        try {
            radical = pi_radical(analysis, sp.sigma, sp.pi);
        } catch (const HypothesisError& e) {
            note = e.what();
        }
    }
    if (o.machine)
        emit(out, {{"radical", radical ? members(*radical) : json(nullptr)}, {"note", note}});
    else
        out << "radical: " << (radical ? radical->to_string() : note) << '\n';
    return radical ? kExitOk : kExitCheckFailed;
}

json lemma_json(const LemmaCheck& c)
{
    return {{"name", c.name},
            {"instances", c.instances},
            {"violations", c.violations},
            {"skipped", c.skipped},
            {"applicable", c.applicable},
            {"first_violation", c.first_violation}};
}

json optional_bool(const std::optional<bool>& b)
{
    return b ? json(*b) : json(nullptr);
}

std::string optional_text(const std::optional<bool>& b)
{
    return b ? yes_no(*b) : "undefined";
}

int cmd_verify(const Options& o, std::ostream& out)
{
    auto sp = parse_sigma_pi(o);
    auto doc = load(o);
    auto analysis = Analysis::build(doc.hypergroup, {o.rank_cap});
    auto report = verify_theorem(analysis, sp.sigma, sp.pi);

    auto checks = structural_lemmas(analysis);
    for (auto& c : lemma_suite(analysis, sp.sigma))
        checks.push_back(std::move(c));
    checks.push_back(thin_criterion(analysis, sp.sigma, sp.pi));

    const bool witnesses = witnesses_verify(analysis, report);
    const bool lemmas = all_passed(checks);
    const bool pass = report.flags.all() && report.conclusions_hold() && witnesses && lemmas;

    if (o.machine) {
        json conj = json::array();
        for (const auto& w : report.conjugacy)
            conj.push_back({{"first", w.first},
                            {"second", w.second},
                            {"element", w.element ? json(*w.element) : json(nullptr)}});
        json cont = json::array();
        for (const auto& c : report.containment)
            cont.push_back({{"pi_subset", members(c.pi_subset)},
                            {"hall_index", c.hall_index ? json(*c.hall_index) : json(nullptr)}});
        json lemma_list = json::array();
        for (const auto& c : checks)
            lemma_list.push_back(lemma_json(c));
        json j = {{"name", doc.name},
                  {"sigma", sp.sigma.to_string()},
                  {"pi", sp.pi.to_string(sp.sigma)},
                  {"flags", flags_json(report.flags, true)},
                  {"radical", report.radical ? members(*report.radical) : json(nullptr)},
                  {"radical_error", report.radical_error},
                  {"hall_subsets", members(report.hall_subsets)},
                  {"constructive", report.constructive ? members(*report.constructive) : json(nullptr)},
                  {"constructive_error", report.constructive_error},
                  {"existence", optional_bool(report.existence)},
                  {"conjugate", optional_bool(report.conjugate)},
                  {"contained", optional_bool(report.contained)},
                  {"conjugacy", conj},
                  {"containment", cont},
                  {"witnesses_verified", witnesses},
                  {"lemmas", lemma_list},
                  {"pass", pass}};
        emit(out, j);
        return pass ? kExitOk : kExitCheckFailed;
    }

    out << "sigma: " << sp.sigma.to_string() << '\n';
    out << "pi: " << sp.pi.to_string(sp.sigma) << '\n';
    print_flags(out, report.flags);
    if (!report.flags.is_rt)
        out << "conclusions undefined: hypergroup is not residually thin\n";
    else {
        out << "radical: " << (report.radical ? report.radical->to_string() : report.radical_error) << '\n';
        out << "Hall subsets: " << report.hall_subsets.size() << '\n';
        for (auto c : report.hall_subsets)
            out << "  " << c << '\n';
        if (report.constructive)
            out << "constructive: " << *report.constructive << '\n';
        else if (!report.constructive_error.empty())
            out << "constructive: " << report.constructive_error << '\n';
    }
    out << "(i) existence: " << optional_text(report.existence) << '\n';
    out << "(ii) conjugacy: " << optional_text(report.conjugate) << '\n';
    for (const auto& w : report.conjugacy)
        out << "  " << report.hall_subsets[w.first] << " ~ " << report.hall_subsets[w.second] << " via "
            << (w.element ? std::to_string(*w.element) : std::string("none")) << '\n';
    out << "(iii) containment: " << optional_text(report.contained) << '\n';
    for (const auto& c : report.containment)
        out << "  " << c.pi_subset << " in "
            << (c.hall_index ? report.hall_subsets[*c.hall_index].to_string() : std::string("none")) << '\n';
    out << "witnesses verified: " << yes_no(witnesses) << '\n';
    out << "lemma checks:\n";
    for (const auto& c : checks) {
        if (!c.applicable) {
            out << "  n/a  " << c.name << '\n';
            continue;
        }
        out << "  " << (c.passed() ? "pass" : "FAIL") << ' ' << c.name << " (" << c.instances << " instances";
        if (c.skipped)
            out << ", " << c.skipped << " skipped";
        out << ")\n";
        if (!c.passed())
            out << "    " << c.first_violation << '\n';
    }
    out << "result: " << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_convert(const Options& o, std::ostream& out)
{
    auto doc = load(o);
    out << serialize_hypergroup(doc);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Finite hypergroups: closed subsets, quotients, valency and Hall Π-subsets", "hyperhall"};
    app.require_subcommand(1);
    app.add_option("--rank-cap", o.rank_cap, "Largest rank for exhaustive closed-subset enumeration")
        ->check(CLI::Range(1, kMaxRank));
    app.add_flag("--machine", o.machine, "Structured JSON output");
    app.fallthrough();

    auto* validate_cmd = app.add_subcommand("validate", "Check the hypergroup axioms");
    auto* analyze_cmd = app.add_subcommand("analyze", "Thin elements, closed subsets, RT status and valency");
    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by the closure of the given generators");
    auto* hall_cmd = app.add_subcommand("hall", "Hall Π-subsets");
    auto* radical_cmd = app.add_subcommand("radical", "The Π-radical");
    auto* verify_cmd = app.add_subcommand("verify", "Check the Hall conclusions and structural lemmas");
    auto* convert_cmd = app.add_subcommand("convert", "Convert a Cayley table or scheme to the native format");

    for (auto* cmd : {validate_cmd, analyze_cmd, quotient_cmd, hall_cmd, radical_cmd, verify_cmd, convert_cmd}) {
        cmd->add_option("file", o.file, "Input file")->required();
        cmd->add_option("--from", o.from, "Input format: native, cayley or scheme (default: detect)");
    }
    quotient_cmd->add_option("generators", o.generators, "Comma-separated element indices");
    for (auto* cmd : {hall_cmd, radical_cmd, verify_cmd}) {
        cmd->add_option("--sigma", o.sigma, "Prime partition: smallest or e.g. 2,3|5");
        cmd->add_option("--pi", o.pi, "Classes: all, indices 0,2 or literal classes {2},{5}")->required();
    }
    auto* c = hall_cmd->add_flag("--constructive", o.constructive, "Build one Hall subset through the radical");
    auto* e = hall_cmd->add_flag("--enumerate", o.enumerate, "List all Hall subsets (default)");
    c->excludes(e);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << ex.what() << '\n';
        return kExitInputError;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(o, out);
        if (analyze_cmd->parsed())
            return cmd_analyze(o, out);
        if (quotient_cmd->parsed())
            return cmd_quotient(o, out);
        if (hall_cmd->parsed())
            return cmd_hall(o, out);
        if (radical_cmd->parsed())
            return cmd_radical(o, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (convert_cmd->parsed())
            return cmd_convert(o, out);
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        for (const auto& v : ex.report.violations)
            err << "  " << to_string(v.axiom) << " witness " << witness_text(v) << ": " << v.detail << '\n';
        return kExitInputError;
    } catch (const TheoremViolation& ex) {
        err << "theorem violation: " << ex.what() << '\n';
        return kExitCheckFailed;
    } catch (const InternalError& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kExitCheckFailed;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace hyperhall
