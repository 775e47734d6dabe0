#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperhall {

/// Largest rank representable by the fixed-width element set.
inline constexpr int kMaxRank = 64;

/// A subset of {0, ..., kMaxRank-1} stored as a single 64-bit word.
class ElementSet
{
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : _bits(bits) {}

    ElementSet(std::initializer_list<int> members)
    {
        for (int m : members)
            insert(m);
    }

    static ElementSet from_members(const std::vector<int>& members)
    {
        ElementSet s;
        for (int m : members)
            s.insert(m);
        return s;
    }

    static constexpr ElementSet singleton(int e) { return ElementSet(std::uint64_t{1} << e); }

    /// {0, ..., n-1}
    static constexpr ElementSet full(int n)
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return _bits; }

    constexpr bool contains(int e) const { return (_bits >> e) & 1u; }
    constexpr void insert(int e) { _bits |= std::uint64_t{1} << e; }
    constexpr void erase(int e) { _bits &= ~(std::uint64_t{1} << e); }

    constexpr bool empty() const { return _bits == 0; }
    constexpr int size() const { return std::popcount(_bits); }

    /// Smallest member, or -1 when empty.
    constexpr int first() const { return _bits ? std::countr_zero(_bits) : -1; }

    /// Largest member, or -1 when empty.
    constexpr int last() const { return _bits ? 63 - std::countl_zero(_bits) : -1; }

    constexpr bool subset_of(ElementSet other) const { return (_bits & ~other._bits) == 0; }
    constexpr bool intersects(ElementSet other) const { return (_bits & other._bits) != 0; }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(_bits | o._bits); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(_bits & o._bits); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(_bits & ~o._bits); }
    constexpr ElementSet& operator|=(ElementSet o) { _bits |= o._bits; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { _bits &= o._bits; return *this; }

    constexpr bool operator==(const ElementSet&) const = default;

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (auto b = _bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Calls f(e) for every member in increasing order.
    template <typename F>
    constexpr void for_each(F&& f) const
    {
        for (auto b = _bits; b; b &= b - 1)
            f(std::countr_zero(b));
    }

    /// "{0,3,4}"
    std::string to_string() const;

private:
    std::uint64_t _bits = 0;
};

/// Canonical subset order used for every listing: by size, then lexicographically
/// by the sorted member list.
bool canonical_less(ElementSet a, ElementSet b);

struct CanonicalLess
{
    bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

std::ostream& operator<<(std::ostream& os, ElementSet s);

} // namespace hyperhall
