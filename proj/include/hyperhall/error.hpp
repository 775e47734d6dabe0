#pragma once

#include <stdexcept>
#include <string>

namespace hyperhall {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: empty product set, index out of range, wrong dimensions.
class StructuralError : public Error
{
public:
    using Error::Error;
};

/// An operation was called outside its contract (e.g. a subset that is not closed).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// The rank exceeds the configured cap for an exhaustive operation.
class RankCapError : public Error
{
public:
    RankCapError(const std::string& what, int rank, int cap)
        : Error(what + ": rank " + std::to_string(rank) + " exceeds cap " + std::to_string(cap))
        , rank(rank)
        , cap(cap)
    {}

    int rank;
    int cap;
};

/// Valency requested for a hypergroup that is not residually thin.
class ValencyUndefinedError : public Error
{
public:
    using Error::Error;
};

/// Input lies outside the hypotheses an operation relies on.
class HypothesisError : public Error
{
public:
    using Error::Error;
};

/// A computed object failed a consistency check that should be unreachable.
class InternalError : public Error
{
public:
    using Error::Error;
};

/// A conclusion guaranteed under the stated hypotheses failed to hold.
class TheoremViolation : public Error
{
public:
    using Error::Error;
};

/// Text input could not be parsed. line/column are 1-based; 0 means unknown.
class ParseError : public Error
{
public:
    ParseError(const std::string& message, int line = 0, int column = 0)
        : Error(format(message, line, column))
        , line(line)
        , column(column)
    {}

    int line;
    int column;

private:
    static std::string format(const std::string& message, int line, int column)
    {
        if (line == 0)
            return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }
};

} // namespace hyperhall
