#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdt {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural violation detected while assembling a dependency tree.
class TreeError : public Error {
 public:
  enum class Kind {
    DuplicateId,
    ReservedId,
    MissingNode,
    MultipleParents,
    MissingParent,
    RootHasParent,
    CycleDetected,
    MissingMetaNode,
  };

  TreeError(Kind kind, std::string node_id, const std::string& message)
      : Error(message), kind_(kind), node_id_(std::move(node_id)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& node_id() const noexcept { return node_id_; }

 private:
  Kind kind_;
  std::string node_id_;
};

const char* to_string(TreeError::Kind kind) noexcept;

// Failure to turn bytes into a Document. Syntax errors carry a 1-based
// position; schema errors carry the JSON path of the offending field and,
// when known, the ID of the node it belongs to.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Schema, Encoding, Invariant };

  ParseError(Kind kind, const std::string& message, std::string field = {},
             std::size_t line = 0, std::size_t column = 0, std::string node_id = {})
      : Error(message),
        kind_(kind),
        field_(std::move(field)),
        line_(line),
        column_(column),
        node_id_(std::move(node_id)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& node_id() const noexcept { return node_id_; }

 private:
  Kind kind_;
  std::string field_;
  std::size_t line_;
  std::size_t column_;
  std::string node_id_;
};

// A tree invariant failed while parsing; wraps the TreeError kind.
class InvariantViolation : public ParseError {
 public:
  explicit InvariantViolation(const TreeError& cause)
      : ParseError(Kind::Invariant, cause.what(), "edges", 0, 0, cause.node_id()),
        tree_kind_(cause.kind()) {}

  TreeError::Kind tree_kind() const noexcept { return tree_kind_; }

 private:
  TreeError::Kind tree_kind_;
};

const char* to_string(ParseError::Kind kind) noexcept;

class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& id)
      : Error("unknown node '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class InvalidCalendar : public Error {
 public:
  using Error::Error;
};

class NotAnInterval : public Error {
 public:
  using Error::Error;
};

class DocumentMismatch : public Error {
 public:
  using Error::Error;
};

class MissingSemantics : public Error {
 public:
  using Error::Error;
};

// A document that must validate did not; the message lists the diagnostics.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace tdt
