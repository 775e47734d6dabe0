#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hyperhall/hypergroup.hpp"

namespace hyperhall {

/// A hypergroup with its document metadata.
struct HypergroupDocument
{
    std::string name;
    /// Free-form provenance, carried in a "# source: ..." comment.
    std::string source;
    FiniteHypergroup hypergroup;
};

/// Native format:
///
///     hypergroup <name>
///     rank <n>
///     [identity <k>]
///     star <n indices>
///     <p> <q> : <sorted members>        (n*n lines)
///
/// '#' starts a comment. An identity other than 0 is moved to index 0 by swapping
/// the two labels. Throws ParseError (with line/column), StructuralError for empty
/// or out-of-range products, and ValidationError when an axiom fails.
HypergroupDocument parse_hypergroup(std::string_view text);

/// Canonical native text: the three header lines then all products, p-major.
std::string serialize_hypergroup(const FiniteHypergroup& h, std::string_view name, std::string_view source = {});
std::string serialize_hypergroup(const HypergroupDocument& doc);

/// Raised by cayley_to_hypergroup for tables that do not describe a group.
class CayleyError : public ParseError
{
public:
    enum class Kind
    {
        NotLatinSquare,
        NoIdentity,
        NotAssociative,
    };

    CayleyError(Kind kind, const std::string& message, int line = 0, int column = 0)
        : ParseError(message, line, column)
        , kind(kind)
    {}

    Kind kind;
};

/// Cayley format:
///
///     group <name>
///     order <n>
///     n lines of n whitespace-separated symbols
///
/// Rows and columns are indexed by the symbols of the first row in order; the first
/// symbol is the identity. The result is thin with star = group inverse.
HypergroupDocument cayley_to_hypergroup(std::string_view text);

/// Scheme format:
///
///     scheme <name>
///     points <m>
///     m lines of m relation indices
///
/// Relation 0 must be exactly the diagonal and the indices used must be 0..r-1.
/// Produces the support hypergroup on the relations: r in pq iff some x, y, z have
/// (x,y) in p, (y,z) in q, (x,z) in r.
HypergroupDocument scheme_to_hypergroup(std::string_view text);

enum class InputFormat
{
    Native,
    Cayley,
    Scheme,
};

/// Looks at the first non-comment keyword.
std::optional<InputFormat> detect_format(std::string_view text);

/// Parses any of the three formats, chosen by detect_format.
HypergroupDocument parse_any(std::string_view text);

/// Reading a file failed.
class IoError : public Error
{
public:
    using Error::Error;
};

std::string read_file(const std::string& path);

} // namespace hyperhall
