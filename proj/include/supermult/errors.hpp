#pragma once

#include <stdexcept>
#include <string>

namespace supermult {

/// Structural misuse: mixed key universes, malformed tables, invalid algebra data.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition was violated by the caller.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured resource cap (word universes, ranges).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Input files or expressions that cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity failed (e.g. a closed formula produced a non-integer).
/// Always indicates a bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace supermult
