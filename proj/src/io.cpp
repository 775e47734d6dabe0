#include "hyperhall/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace hyperhall {

namespace {

struct Token
{
    std::string text;
    int column; // 1-based
};

struct Line
{
    int number; // 1-based
    std::vector<Token> tokens;
};

/// Splits into non-blank lines of whitespace-separated tokens, dropping '#' comments.
/// A "# source: ..." comment is captured into `source`.
std::vector<Line> tokenize(std::string_view text, std::string* source = nullptr)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);

        auto hash = raw.find('#');
        if (hash != std::string_view::npos) {
            auto comment = raw.substr(hash + 1);
            auto first = comment.find_first_not_of(" \t");
            comment = first == std::string_view::npos ? std::string_view{} : comment.substr(first);
            constexpr std::string_view key = "source:";
            if (source && comment.substr(0, key.size()) == key) {
                auto value = comment.substr(key.size());
                auto start = value.find_first_not_of(" \t");
                *source = start == std::string_view::npos ? std::string{} : std::string(value.substr(start));
            }
            raw = raw.substr(0, hash);
        }

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
                continue;
            }
            auto j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t')
                ++j;
            line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return lines;
}

int parse_int(const Token& token, int line)
{
    int value = 0;
    const auto* begin = token.text.data();
    const auto* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("expected an integer, found '" + token.text + "'", line, token.column);
    return value;
}

/// Consumes a `<keyword> <argument>` header line.
const Line& expect_header(const std::vector<Line>& lines, std::size_t index, const char* keyword, int last_line)
{
    if (index >= lines.size())
        throw ParseError(std::string("missing '") + keyword + "' line", last_line + 1, 1);
    const auto& line = lines[index];
    if (line.tokens.front().text != keyword)
        throw ParseError(std::string("expected '") + keyword + "', found '" + line.tokens.front().text + "'",
                         line.number, line.tokens.front().column);
    if (line.tokens.size() != 2)
        throw ParseError(std::string("'") + keyword + "' takes exactly one argument", line.number,
                         line.tokens.front().column);
    return line;
}

int expect_count(const Line& line, const char* what)
{
    auto n = parse_int(line.tokens[1], line.number);
    if (n < 1 || n > kMaxRank)
        throw ParseError(std::string(what) + " must be between 1 and " + std::to_string(kMaxRank), line.number,
                         line.tokens[1].column);
    return n;
}

int last_line_number(const std::vector<Line>& lines)
{
    return lines.empty() ? 0 : lines.back().number;
}

} // namespace

HypergroupDocument parse_hypergroup(std::string_view text)
{
    HypergroupDocument doc{{}, {}, FiniteHypergroup::create({1, {0}, {{0}}})};
    const auto lines = tokenize(text, &doc.source);
    const int last = last_line_number(lines);

    std::size_t at = 0;
    doc.name = expect_header(lines, at++, "hypergroup", last).tokens[1].text;
    const int n = expect_count(expect_header(lines, at++, "rank", last), "rank");

    int identity = 0;
    if (at < lines.size() && lines[at].tokens.front().text == "identity") {
        const auto& line = expect_header(lines, at++, "identity", last);
        identity = parse_int(line.tokens[1], line.number);
        if (identity < 0 || identity >= n)
            throw StructuralError("identity " + std::to_string(identity) + " out of range");
    }

    if (at >= lines.size() || lines[at].tokens.front().text != "star")
        throw ParseError("expected 'star'", at < lines.size() ? lines[at].number : last + 1, 1);
    const auto& star_line = lines[at++];
    if (static_cast<int>(star_line.tokens.size()) != n + 1)
        throw ParseError("'star' needs " + std::to_string(n) + " entries", star_line.number,
                         star_line.tokens.front().column);

    RawHypergroup raw;
    raw.rank = n;
    for (int i = 0; i < n; ++i)
        raw.star.push_back(parse_int(star_line.tokens[i + 1], star_line.number));
    raw.products.resize(static_cast<std::size_t>(n) * n);

    std::vector<char> seen(raw.products.size(), 0);
    for (; at < lines.size(); ++at) {
        const auto& line = lines[at];
        const auto& t = line.tokens;
        if (t.size() < 3 || t[2].text != ":")
            throw ParseError("expected '<p> <q> : <members>'", line.number, t.front().column);
        int p = parse_int(t[0], line.number);
        int q = parse_int(t[1], line.number);
        if (p < 0 || p >= n || q < 0 || q >= n)
            throw ParseError("index out of range", line.number, t[p < 0 || p >= n ? 0 : 1].column);
        auto cell = static_cast<std::size_t>(p) * n + q;
        if (seen[cell])
            throw ParseError("duplicate entry for " + std::to_string(p) + " " + std::to_string(q), line.number,
                             t.front().column);
        seen[cell] = 1;
        if (t.size() == 3)
            throw StructuralError("line " + std::to_string(line.number) + ": empty product " + std::to_string(p) + " "
                                  + std::to_string(q));
        for (std::size_t k = 3; k < t.size(); ++k) {
            if (t[k].text == "∅")
                throw StructuralError("line " + std::to_string(line.number) + ": empty product "
                                      + std::to_string(p) + " " + std::to_string(q));
            raw.products[cell].push_back(parse_int(t[k], line.number));
        }
    }
    for (std::size_t cell = 0; cell < seen.size(); ++cell)
        if (!seen[cell])
            throw ParseError("missing entry for " + std::to_string(cell / n) + " " + std::to_string(cell % n),
                             last + 1, 1);

    if (identity != 0) {
        auto swap = [identity](int x) { return x == identity ? 0 : x == 0 ? identity : x; };
        RawHypergroup moved;
        moved.rank = n;
        moved.star.assign(n, 0);
        moved.products.resize(raw.products.size());
        for (int p = 0; p < n; ++p) {
            if (raw.star[p] >= 0 && raw.star[p] < n)
                moved.star[swap(p)] = swap(raw.star[p]);
            else
                moved.star[swap(p)] = raw.star[p];
            for (int q = 0; q < n; ++q) {
                auto& out = moved.products[static_cast<std::size_t>(swap(p)) * n + swap(q)];
                for (int m : raw.products[static_cast<std::size_t>(p) * n + q])
                    out.push_back(m >= 0 && m < n ? swap(m) : m);
            }
        }
        raw = std::move(moved);
    }

    doc.hypergroup = FiniteHypergroup::create(raw);
    return doc;
}

std::string serialize_hypergroup(const FiniteHypergroup& h, std::string_view name, std::string_view source)
{
    std::ostringstream out;
    out << "hypergroup " << (name.empty() ? std::string_view("unnamed") : name) << '\n';
    out << "rank " << h.rank() << '\n';
    out << "star";
    for (int s = 0; s < h.rank(); ++s)
        out << ' ' << h.star(s);
    out << '\n';
    for (int p = 0; p < h.rank(); ++p)
        for (int q = 0; q < h.rank(); ++q) {
            out << p << ' ' << q << " :";
            h.product(p, q).for_each([&](int m) { out << ' ' << m; });
            out << '\n';
        }
    if (!source.empty())
        out << "# source: " << source << '\n';
    return out.str();
}

std::string serialize_hypergroup(const HypergroupDocument& doc)
{
    return serialize_hypergroup(doc.hypergroup, doc.name, doc.source);
}

HypergroupDocument cayley_to_hypergroup(std::string_view text)
{
    std::string source;
    const auto lines = tokenize(text, &source);
    const int last = last_line_number(lines);

    const auto name = expect_header(lines, 0, "group", last).tokens[1].text;
    const auto& order_line = expect_header(lines, 1, "order", last);
    const int n = expect_count(order_line, "order");
    if (static_cast<int>(lines.size()) != n + 2)
        throw ParseError("expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 2),
                         lines.size() > static_cast<std::size_t>(n) + 2 ? lines[n + 2].number : last + 1, 1);

    std::map<std::string, int> index;
    for (const auto& token : lines[2].tokens)
        if (!index.emplace(token.text, static_cast<int>(index.size())).second)
            throw CayleyError(CayleyError::Kind::NotLatinSquare, "symbol '" + token.text + "' repeats in a row",
                              lines[2].number, token.column);

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto& line = lines[i + 2];
        if (static_cast<int>(line.tokens.size()) != n)
            throw ParseError("row needs " + std::to_string(n) + " symbols", line.number, line.tokens.front().column);
        ElementSet row;
        for (int j = 0; j < n; ++j) {
            const auto& token = line.tokens[j];
            auto it = index.find(token.text);
            if (it == index.end())
                throw CayleyError(CayleyError::Kind::NotLatinSquare, "unknown symbol '" + token.text + "'",
                                  line.number, token.column);
            if (row.contains(it->second))
                throw CayleyError(CayleyError::Kind::NotLatinSquare, "symbol '" + token.text + "' repeats in a row",
                                  line.number, token.column);
            row.insert(it->second);
            table[static_cast<std::size_t>(i) * n + j] = it->second;
        }
    }
    for (int j = 0; j < n; ++j) {
        ElementSet column;
        for (int i = 0; i < n; ++i) {
            int v = table[static_cast<std::size_t>(i) * n + j];
            if (column.contains(v))
                throw CayleyError(CayleyError::Kind::NotLatinSquare, "symbol repeats in a column",
                                  lines[i + 2].number, lines[i + 2].tokens[j].column);
            column.insert(v);
        }
    }
    // Row 0 names the columns, so e*x = x holds by construction; x*e = x is the check.
    for (int i = 0; i < n; ++i)
        if (table[static_cast<std::size_t>(i) * n] != i)
            throw CayleyError(CayleyError::Kind::NoIdentity,
                              "first symbol is not a two-sided identity (column 0 differs from row 0)",
                              lines[i + 2].number, lines[i + 2].tokens[0].column);

    auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    const auto& symbols = lines[2].tokens;
                    throw CayleyError(CayleyError::Kind::NotAssociative,
                                      "not associative: (" + symbols[a].text + " " + symbols[b].text + ") "
                                          + symbols[c].text + " != " + symbols[a].text + " (" + symbols[b].text
                                          + " " + symbols[c].text + ")");
                }

    RawHypergroup raw;
    raw.rank = n;
    raw.star.assign(n, 0);
    raw.products.resize(table.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            raw.products[static_cast<std::size_t>(a) * n + b] = {mul(a, b)};
            if (mul(a, b) == 0)
                raw.star[a] = b;
        }
    return {name, source, FiniteHypergroup::create(raw)};
}

HypergroupDocument scheme_to_hypergroup(std::string_view text)
{
    std::string source;
    const auto lines = tokenize(text, &source);
    const int last = last_line_number(lines);

    const auto name = expect_header(lines, 0, "scheme", last).tokens[1].text;
    const auto& points_line = expect_header(lines, 1, "points", last);
    const int m = parse_int(points_line.tokens[1], points_line.number);
    if (m < 1)
        throw ParseError("points must be positive", points_line.number, points_line.tokens[1].column);
    if (static_cast<int>(lines.size()) != m + 2)
        throw ParseError("expected " + std::to_string(m) + " matrix rows, found " + std::to_string(lines.size() - 2),
                         lines.size() > static_cast<std::size_t>(m) + 2 ? lines[m + 2].number : last + 1, 1);

    std::vector<int> rel(static_cast<std::size_t>(m) * m);
    int rank = 0;
    for (int x = 0; x < m; ++x) {
        const auto& line = lines[x + 2];
        if (static_cast<int>(line.tokens.size()) != m)
            throw ParseError("row needs " + std::to_string(m) + " entries", line.number, line.tokens.front().column);
        for (int y = 0; y < m; ++y) {
            const auto& token = line.tokens[y];
            int r = parse_int(token, line.number);
            if (r < 0 || r >= kMaxRank)
                throw ParseError("relation index out of range", line.number, token.column);
            if ((x == y) != (r == 0))
                throw ParseError(x == y ? "diagonal entry must be relation 0" : "relation 0 must be the diagonal",
                                 line.number, token.column);
            rel[static_cast<std::size_t>(x) * m + y] = r;
            rank = std::max(rank, r + 1);
        }
    }
    auto at = [&](int x, int y) { return rel[static_cast<std::size_t>(x) * m + y]; };

    ElementSet used;
    for (int r : rel)
        used.insert(r);
    if (used != ElementSet::full(rank))
        throw ParseError("relation indices are not contiguous: missing " + (ElementSet::full(rank) - used).to_string());

    std::vector<int> star(rank, -1);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int r = at(x, y);
            int t = at(y, x);
            if (star[r] == -1)
                star[r] = t;
            else if (star[r] != t)
                throw ParseError("transpose of relation " + std::to_string(r) + " is not a single relation",
                                 lines[x + 2].number, lines[x + 2].tokens[y].column);
        }

    std::vector<ElementSet> support(static_cast<std::size_t>(rank) * rank);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                support[static_cast<std::size_t>(at(x, y)) * rank + at(y, z)].insert(at(x, z));

    RawHypergroup raw;
    raw.rank = rank;
    raw.star = star;
    for (auto s : support)
        raw.products.push_back(s.members());
    return {name, source, FiniteHypergroup::create(raw)};
}

std::optional<InputFormat> detect_format(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        return std::nullopt;
    const auto& keyword = lines.front().tokens.front().text;
    if (keyword == "hypergroup")
        return InputFormat::Native;
    if (keyword == "group")
        return InputFormat::Cayley;
    if (keyword == "scheme")
        return InputFormat::Scheme;
    return std::nullopt;
}

HypergroupDocument parse_any(std::string_view text)
{
    auto format = detect_format(text);
    if (!format)
        throw ParseError("unrecognized format: expected 'hypergroup', 'group' or 'scheme'", 1, 1);
    switch (*format) {
    case InputFormat::Native:
        return parse_hypergroup(text);
    case InputFormat::Cayley:
        return cayley_to_hypergroup(text);
    case InputFormat::Scheme:
        return scheme_to_hypergroup(text);
    }
    throw InternalError("unhandled input format");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace hyperhall
