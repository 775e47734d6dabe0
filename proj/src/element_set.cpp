#include "hyperhall/element_set.hpp"

#include <ostream>

namespace hyperhall {

std::string ElementSet::to_string() const
{
    std::string out = "{";
    bool first_member = true;
    for_each([&](int e) {
        if (!first_member)
            out += ',';
        out += std::to_string(e);
        first_member = false;
    });
    out += '}';
    return out;
}

bool canonical_less(ElementSet a, ElementSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    // Equal sizes: the sorted lists first differ at the smallest element of the
    // symmetric difference, and the set holding it is the smaller one.
    auto diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

std::ostream& operator<<(std::ostream& os, ElementSet s)
{
    return os << s.to_string();
}

} // namespace hyperhall
