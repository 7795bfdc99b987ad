#pragma once

#include <stdexcept>
#include <string>

namespace tbg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two classes with different base genus were combined.
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

/// A generator move carries an index outside 1..g, equal i and j where they
/// must differ, or a malformed sign pattern.
class InvalidMoveError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (e.g. the adjunction bound on the zero class).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation is stated only for certain base genera (e.g. the complexity
/// corollary requires g >= 2).
class UnsupportedContextError : public Error {
public:
    using Error::Error;
};

/// A documented precondition was violated (e.g. replaying a class that is not
/// in normal form).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (class literals, move literals, words).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A configured resource budget (search nodes, copy counts) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace tbg
