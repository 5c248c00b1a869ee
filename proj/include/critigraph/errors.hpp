/*
Copyright 2026 The critigraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critigraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Request exceeds a fixed capacity (64 vertices, enumeration guards).
class CapacityError : public Error {
  public:
    using Error::Error;
};

class BoundsError : public Error {
  public:
    using Error::Error;
};

class LoopError : public Error {
  public:
    using Error::Error;
};

/// Malformed call, e.g. contracting an empty set.
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Input violates a documented precondition (not strongly connected, not a cycle, ...).
class PreconditionError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A checked invariant failed. Carries the offending instance as an edge list
/// so the failure can be replayed.
class InvariantError : public Error {
  public:
    InvariantError(const std::string &what, std::string instance)
        : Error(what), instance_(std::move(instance)) {}

    const std::string &instance() const noexcept { return instance_; }

  private:
    std::string instance_;
};

/// Error in a text document, tagged with its 1-based line number.
class DocumentError : public Error {
  public:
    DocumentError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class ParseError : public DocumentError {
  public:
    using DocumentError::DocumentError;
};

/// Well-formed document describing an invalid digraph (loop, duplicate, range).
class ValidationError : public DocumentError {
  public:
    using DocumentError::DocumentError;
};

} // namespace critigraph
