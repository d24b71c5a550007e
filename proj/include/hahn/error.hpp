#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hahn {

// Operands drawn from two different value groups.
class GroupMismatch : public std::invalid_argument {
public:
    explicit GroupMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Operands drawn from two different coefficient fields.
class FieldMismatch : public std::invalid_argument {
public:
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : std::domain_error(what) {}
};

// The element has no inverse inside the representation it lives in
// (e.g. 1 + t as a finite-support series).
class NotInvertible : public std::domain_error {
public:
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// The operation needs an archimedean value group.
class UnsupportedGroup : public std::domain_error {
public:
    explicit UnsupportedGroup(const std::string& what) : std::domain_error(what) {}
};

// A truncation structure produced a value that contradicts its own axioms.
class StructureViolation : public std::runtime_error {
public:
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

// A lazily evaluated quantity could not be decided within its search limit.
class Undetermined : public std::runtime_error {
public:
    explicit Undetermined(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace hahn
