#include "hyperhall/sigma.hpp"

#include <algorithm>
#include <charconv>

#include "hyperhall/error.hpp"

namespace hyperhall {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

PrimePartition PrimePartition::smallest()
{
    return PrimePartition{};
}

PrimePartition PrimePartition::from_classes(std::vector<std::vector<std::uint64_t>> classes, bool rest_class)
{
    std::set<std::uint64_t> seen;
    for (auto& c : classes) {
        if (c.empty())
            throw PreconditionError("prime partition: empty class");
        std::sort(c.begin(), c.end());
        for (auto p : c) {
            if (!is_prime(p))
                throw PreconditionError("prime partition: " + std::to_string(p) + " is not prime");
            if (!seen.insert(p).second)
                throw PreconditionError("prime partition: " + std::to_string(p) + " appears in two classes");
        }
    }
    PrimePartition sigma;
    sigma._classes = std::move(classes);
    sigma._rest = rest_class;
    return sigma;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

std::uint64_t parse_number(std::string_view token, std::string_view whole)
{
    token = trim(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        int column = token.empty() ? 0 : static_cast<int>(token.data() - whole.data()) + 1;
        throw ParseError("expected a number, got '" + std::string(token) + "' in '" + std::string(whole) + "'", 1,
                         column);
    }
    return value;
}

} // namespace

PrimePartition PrimePartition::parse(std::string_view text)
{
    auto t = trim(text);
    if (t == "smallest")
        return smallest();
    std::vector<std::vector<std::uint64_t>> classes;
    bool rest = false;
    for (auto part : split(t, '|')) {
        if (rest)
            throw ParseError("the rest class '*' must come last in '" + std::string(text) + "'");
        if (trim(part) == "*") {
            rest = true;
            continue;
        }
        std::vector<std::uint64_t> members;
        for (auto token : split(part, ','))
            members.push_back(parse_number(token, text));
        classes.push_back(std::move(members));
    }
    try {
        return from_classes(std::move(classes), rest);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::size_t PrimePartition::class_index(std::uint64_t prime) const
{
    for (std::size_t i = 0; i < _classes.size(); ++i)
        if (std::binary_search(_classes[i].begin(), _classes[i].end(), prime))
            return i;
    std::size_t index = _classes.size();
    if (_rest)
        return index;
    for (std::uint64_t q = 2; q < prime; ++q)
        if (is_prime(q) && std::none_of(_classes.begin(), _classes.end(), [q](const auto& c) {
                return std::binary_search(c.begin(), c.end(), q);
            }))
            ++index;
    return index;
}

std::vector<std::uint64_t> PrimePartition::class_members(std::size_t index) const
{
    if (index < _classes.size())
        return _classes[index];
    if (_rest)
        return {};
    std::size_t remaining = index - _classes.size();
    for (std::uint64_t q = 2;; ++q) {
        if (!is_prime(q) || class_index(q) < _classes.size())
            continue;
        if (remaining == 0)
            return {q};
        --remaining;
    }
}

bool PrimePartition::is_class_number(std::uint64_t n, std::size_t index) const
{
    auto primes = prime_divisors(n);
    return std::all_of(primes.begin(), primes.end(), [&](auto p) { return class_index(p) == index; });
}

bool PrimePartition::is_sigma_number(std::uint64_t n) const
{
    auto primes = prime_divisors(n);
    if (primes.empty())
        return true;
    return is_class_number(n, class_index(primes.front()));
}

std::string PrimePartition::to_string() const
{
    if (is_smallest())
        return "smallest";
    std::string out;
    for (std::size_t i = 0; i < _classes.size(); ++i) {
        if (i)
            out += '|';
        for (std::size_t j = 0; j < _classes[i].size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(_classes[i][j]);
        }
    }
    if (_rest)
        out += _classes.empty() ? "*" : "|*";
    return out;
}

PiSelection PiSelection::of(std::set<std::size_t> indices)
{
    PiSelection pi;
    pi._indices = std::move(indices);
    return pi;
}

PiSelection PiSelection::all()
{
    PiSelection pi;
    pi._complemented = true;
    return pi;
}

PiSelection PiSelection::complement() const
{
    PiSelection pi = *this;
    pi._complemented = !_complemented;
    return pi;
}

PiSelection PiSelection::parse(std::string_view text, const PrimePartition& sigma)
{
    auto t = trim(text);
    if (t == "all" || t == "all-classes")
        return all();
    std::set<std::size_t> indices;
    if (t.empty())
        return of(indices);
    if (t.find('{') == std::string_view::npos) {
        for (auto token : split(t, ','))
            indices.insert(parse_number(token, text));
        return of(indices);
    }

    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] == ',' || t[pos] == ' ') {
            ++pos;
            continue;
        }
        int column = static_cast<int>(t.data() + pos - text.data()) + 1;
        if (t[pos] != '{')
            throw ParseError("expected '{' in '" + std::string(text) + "'", 1, column);
        auto close = t.find('}', pos);
        if (close == std::string_view::npos)
            throw ParseError("unterminated class in '" + std::string(text) + "'", 1, column);
        auto inner = trim(t.substr(pos + 1, close - pos - 1));
        if (inner == "*") {
            if (!sigma.has_rest_class())
                throw ParseError("sigma " + sigma.to_string() + " has no rest class", 1, column);
            indices.insert(sigma.explicit_classes().size());
            pos = close + 1;
            continue;
        }
        std::vector<std::uint64_t> members;
        for (auto token : split(t.substr(pos + 1, close - pos - 1), ','))
            members.push_back(parse_number(token, text));
        std::sort(members.begin(), members.end());
        if (members.empty())
            throw ParseError("empty class in '" + std::string(text) + "'", 1, column);
        if (!is_prime(members.front()))
            throw ParseError(std::to_string(members.front()) + " is not prime", 1, column);
        auto index = sigma.class_index(members.front());
        if (sigma.class_members(index) != members)
            throw ParseError("class " + std::string(t.substr(pos, close - pos + 1)) + " is not a class of sigma "
                                 + sigma.to_string(),
                             1, column);
        indices.insert(index);
        pos = close + 1;
    }
    return of(indices);
}

std::string PiSelection::to_string(const PrimePartition& sigma) const
{
    std::string listed;
    for (auto i : _indices) {
        if (!listed.empty())
            listed += ',';
        listed += '{';
        auto members = sigma.class_members(i);
        if (members.empty())
            listed += '*';
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j)
                listed += ',';
            listed += std::to_string(members[j]);
        }
        listed += '}';
    }
    if (!_complemented)
        return listed;
    return listed.empty() ? "all" : "all except " + listed;
}

bool is_pi_number(std::uint64_t n, const PrimePartition& sigma, const PiSelection& pi)
{
    auto primes = prime_divisors(n);
    return std::all_of(primes.begin(), primes.end(), [&](auto p) { return pi.contains(sigma.class_index(p)); });
}

} // namespace hyperhall
