#ifndef BORWEIN_ERRORS_HPP
#define BORWEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borwein {

/* Base class for all library errors. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Invalid or unsupported parameters: non-prime p, out-of-range residues,
 * mismatched moduli, malformed cycle types, and the like. */
class SpecError : public Error {
public:
    explicit SpecError(const std::string& what) : Error(what) {}
};

/* A computation would exceed its coefficient or enumeration budget. */
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/* Two routes that must agree exactly disagreed, or an exact quantity
 * failed an integrality check.  Always indicates a bug, never bad input. */
class CheckError : public Error {
public:
    explicit CheckError(const std::string& what) : Error(what) {}
};

} // namespace borwein

#endif
