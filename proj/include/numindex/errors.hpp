#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace numindex {

/**
 * Raised when an input violates a documented precondition (dimension
 * mismatch, point off the unit sphere, asymmetric vertex set, malformed
 * schema, ...).  The CLI maps this to exit code 2.
 */
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/**
 * Raised when the vertex set of a candidate unit ball does not span the
 * ambient space, so the gauge it induces is not a norm.
 */
class DegenerateSeminorm : public PreconditionError {
public:
    explicit DegenerateSeminorm(const std::string& what)
        : PreconditionError(what)
    {
    }
};

/**
 * Raised when an operator with zero numerical radius is handed to a
 * routine that needs to normalize by the radius.
 */
class ZeroRadius : public PreconditionError {
public:
    explicit ZeroRadius(const std::string& what)
        : PreconditionError(what)
    {
    }
};

/**
 * Raised when a feasible region handed to the vertex enumerator is
 * unbounded in some direction.
 */
class UnboundedInput : public PreconditionError {
public:
    explicit UnboundedInput(const std::string& what)
        : PreconditionError(what)
    {
    }
};

/**
 * Raised when two independently computed descriptions of the same set
 * disagree.  `difference` carries a printable form of the symmetric
 * difference that triggered the failure.  The CLI maps this to exit
 * code 3.
 */
class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(const std::string& what,
                         std::vector<std::string> difference)
        : std::runtime_error(what), difference(std::move(difference))
    {
    }

    std::vector<std::string> difference;
};

}   // namespace numindex
