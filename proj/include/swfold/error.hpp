#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swfold {

enum class ErrorKind {
  structural,
  domain,
  syntax,
  name,
  lookup,
  hypothesis,
  not_a_knot,
  overflow,
  schema,
};

// Short upper-case tag used as the machine-greppable prefix of CLI errors.
const char* error_code(ErrorKind kind) noexcept;

// 1 for domain/hypothesis failures, 2 for malformed input.
int exit_status(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what)
      : Error(ErrorKind::structural, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::domain, what) {}

 protected:
  DomainError(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::syntax,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NameError : public Error {
 public:
  explicit NameError(const std::string& what) : Error(ErrorKind::name, what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what)
      : Error(ErrorKind::lookup, what) {}
};

class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what)
      : Error(ErrorKind::hypothesis, what) {}
};

class NotAKnotError : public DomainError {
 public:
  explicit NotAKnotError(const std::string& what)
      : DomainError(ErrorKind::not_a_knot, what) {}
};

class OverflowError : public DomainError {
 public:
  explicit OverflowError(const std::string& what)
      : DomainError(ErrorKind::overflow, what) {}
};

// A zero Euler class: the circle bundle is a product and the fold degenerates.
class TorsionEulerClassError : public DomainError {
 public:
  TorsionEulerClassError()
      : DomainError(
            "torsion Euler class: the fold formula does not apply; SW4(M x S1) = "
            "SW3(M) for the product") {}
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(ErrorKind::schema, path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace swfold
