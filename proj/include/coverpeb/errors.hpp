#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverpeb {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, distribution vectors, certificates).
class FormatError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(int vertex)
        : Error("self-loop at vertex " + std::to_string(vertex)), vertex(vertex) {}
    int vertex;
};

class VertexOutOfRangeError : public Error {
public:
    VertexOutOfRangeError(int vertex, int vertex_count)
        : Error("vertex " + std::to_string(vertex) + " out of range [0," +
                std::to_string(vertex_count) + ")"),
          vertex(vertex) {}
    int vertex;
};

/// Raised when a graph required to be connected is not. Carries the set of
/// vertices unreachable from vertex 0 as a witness.
class DisconnectedError : public Error {
public:
    explicit DisconnectedError(std::vector<int> unreachable_witness)
        : Error("graph is disconnected (" + std::to_string(unreachable_witness.size()) +
                " vertices unreachable from 0)"),
          unreachable(std::move(unreachable_witness)) {}
    std::vector<int> unreachable;
};

class EmptySetError : public Error {
public:
    EmptySetError() : Error("vertex set must be nonempty") {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t got, std::size_t want)
        : Error("distribution length " + std::to_string(got) + " does not match " +
                std::to_string(want)) {}
};

class NotAdjacentError : public Error {
public:
    NotAdjacentError(int source, int target)
        : Error("no edge " + std::to_string(source) + "-" + std::to_string(target)),
          source(source), target(target) {}
    int source;
    int target;
};

class InsufficientPebblesError : public Error {
public:
    InsufficientPebblesError(int vertex, std::uint64_t have)
        : Error("vertex " + std::to_string(vertex) + " has " + std::to_string(have) +
                " pebbles, move needs 2"),
          vertex(vertex) {}
    int vertex;
};

/// A move sequence broke down at `index`; `what()` includes the cause.
class IllegalMoveError : public Error {
public:
    IllegalMoveError(std::size_t index, const std::string& cause)
        : Error("illegal move at index " + std::to_string(index) + ": " + cause),
          index(index) {}
    std::size_t index;
};

/// An operation-level precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NonPositiveWeightError : public PreconditionError {
public:
    explicit NonPositiveWeightError(int vertex)
        : PreconditionError("weight must be >= 1 everywhere, vertex " +
                            std::to_string(vertex) + " has weight 0"),
          vertex(vertex) {}
    int vertex;
};

class TooManyVerticesError : public PreconditionError {
public:
    TooManyVerticesError(int got, int bound)
        : PreconditionError("graph has " + std::to_string(got) +
                            " vertices, exhaustive bound is " + std::to_string(bound)) {}
};

/// Fixed-width pebble counts would wrap. Detected, never silent.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A search exhausted its state or time budget without reaching a verdict.
class LimitExceededError : public Error {
public:
    using Error::Error;
};

/// Consistency failure that the underlying theory rules out; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace coverpeb
