#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hyperhall {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order; empty for n = 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A partition σ of all primes. Finitely many classes are listed explicitly; every
/// prime not listed forms its own singleton class, unless the partition has a rest
/// class, which then holds all of them. Class indices: the explicit classes come first
/// in the given order, then the rest class or the implicit singletons in increasing
/// order of their prime. For the smallest partition index i is therefore {p_i} (0 -> {2}).
class PrimePartition
{
public:
    static PrimePartition smallest();

    /// Throws PreconditionError for non-primes, empty classes or overlapping classes.
    static PrimePartition from_classes(std::vector<std::vector<std::uint64_t>> classes, bool rest_class = false);

    /// "smallest" or classes separated by '|', primes by ',' as in "2,3|5|7". A final
    /// class "*" is the rest class, so "2,3|*" is {{2,3}, every other prime}.
    /// Throws ParseError.
    static PrimePartition parse(std::string_view text);

    std::size_t class_index(std::uint64_t prime) const;
    /// Members of a class; empty for the rest class.
    std::vector<std::uint64_t> class_members(std::size_t index) const;
    bool has_rest_class() const { return _rest; }
    const std::vector<std::vector<std::uint64_t>>& explicit_classes() const { return _classes; }

    bool is_smallest() const { return _classes.empty() && !_rest; }

    /// Every prime divisor of n lies in class `index`.
    bool is_class_number(std::uint64_t n, std::size_t index) const;

    /// n is a σ_j-number for some class j.
    bool is_sigma_number(std::uint64_t n) const;

    std::string to_string() const;

private:
    std::vector<std::vector<std::uint64_t>> _classes;
    bool _rest = false;
};

/// A set Π of classes of a PrimePartition, possibly co-finite (Π = σ \ {listed}).
class PiSelection
{
public:
    static PiSelection of(std::set<std::size_t> indices);
    static PiSelection all();

    /// "all", class indices "0,2", or literal classes "{2},{5}" resolved against sigma.
    /// Throws ParseError.
    static PiSelection parse(std::string_view text, const PrimePartition& sigma);

    bool contains(std::size_t class_index) const { return _complemented != (_indices.count(class_index) > 0); }

    /// Π' = σ \ Π
    PiSelection complement() const;

    std::string to_string(const PrimePartition& sigma) const;

private:
    std::set<std::size_t> _indices;
    bool _complemented = false;
};

/// π(n) is contained in the union of the classes in Π.
bool is_pi_number(std::uint64_t n, const PrimePartition& sigma, const PiSelection& pi);

} // namespace hyperhall
