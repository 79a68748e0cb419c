#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxitive {

/// Base class of every error this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateLabel : public Error {
public:
  explicit DuplicateLabel(std::string label)
      : Error("duplicate atom label \"" + label + "\""), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

private:
  std::string label_;
};

class EmptyLabelList : public Error {
public:
  EmptyLabelList() : Error("a space needs at least one atom") {}
};

class TooManyAtoms : public Error {
public:
  explicit TooManyAtoms(std::size_t count)
      : Error("too many atoms: " + std::to_string(count) + " (limit is 16)"),
        count_(count) {}
  std::size_t count() const noexcept { return count_; }

private:
  std::size_t count_;
};

class MissingAtomValue : public Error {
public:
  explicit MissingAtomValue(std::string atom)
      : Error("no value given for atom \"" + atom + "\""), atom_(std::move(atom)) {}
  const std::string& atom() const noexcept { return atom_; }

private:
  std::string atom_;
};

class UnknownAtom : public Error {
public:
  UnknownAtom(std::string label, const std::string& where)
      : Error("unknown atom \"" + label + "\" in " + where), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

private:
  std::string label_;
};

class SpaceMismatch : public Error {
public:
  SpaceMismatch() : Error("operands live on different spaces") {}
};

class NotSigmaFinite : public Error {
public:
  explicit NotSigmaFinite(std::string atom)
      : Error("atom \"" + atom + "\" has infinite measure, so the measure is not sigma-finite"),
        atom_(std::move(atom)) {}
  const std::string& atom() const noexcept { return atom_; }

private:
  std::string atom_;
};

class PartitionEnumerationTooLarge : public Error {
public:
  explicit PartitionEnumerationTooLarge(int atom_count)
      : Error("partition enumeration over " + std::to_string(atom_count) +
              " atoms exceeds the ceiling of 10 (Bell(10) = 115975)"),
        atom_count_(atom_count) {}
  int atom_count() const noexcept { return atom_count_; }

private:
  int atom_count_;
};

class PreconditionNotTwoValued : public Error {
public:
  PreconditionNotTwoValued() : Error("measure is not two-valued") {}
};

/// Document-level errors raised while parsing the interchange format.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::string location)
      : Error("parse error at " + location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

private:
  std::string location_;
};

class MalformedValue : public Error {
public:
  MalformedValue(std::string text, std::string location)
      : Error("malformed value \"" + text + "\" at " + location +
              " (expected \"p/q\", a nonnegative integer, or \"inf\")"),
        text_(std::move(text)),
        location_(std::move(location)) {}
  const std::string& text() const noexcept { return text_; }
  const std::string& location() const noexcept { return location_; }

private:
  std::string text_;
  std::string location_;
};

class IncompleteTable : public Error {
public:
  explicit IncompleteTable(std::string missing_set)
      : Error("table document is missing set \"" + missing_set + "\""),
        missing_set_(std::move(missing_set)) {}
  const std::string& missing_set() const noexcept { return missing_set_; }

private:
  std::string missing_set_;
};

}  // namespace maxitive
