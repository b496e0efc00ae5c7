#ifndef RZK_ERROR_HPP
#define RZK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rzk {

// Malformed user input: facet labels out of range, unparsable files, bad flags.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured cap (vertex count, cell count) was exceeded.
class SizeLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the domain of an operation (e.g. a monomial not in the
// requested multidegree component).
class DomainError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// d∘d ≠ 0 on a cochain complex handed to the cohomology engine.
class ComplexInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rzk

#endif // RZK_ERROR_HPP
