#pragma once

#include <stdexcept>
#include <string>

namespace higgs {

// Two failure families, chosen so a task runner can branch on them:
// InputError means the request itself is malformed or out of contract,
// MathError means the mathematics refuses (parity obstruction, no theta
// characteristic, infeasible shape, ...).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

class InputError : public Error {
public:
  using Error::Error;
};

class MathError : public Error {
public:
  using Error::Error;
};

struct ParseError final : InputError {
  ParseError(const std::string& what, std::size_t byte)
      : InputError("ParseError", what), byte_offset(byte) {}
  std::size_t byte_offset;
};

struct SchemaError final : InputError {
  SchemaError(const std::string& what, std::string path_in)
      : InputError("SchemaError", what), path(std::move(path_in)) {}
  std::string path;
};

// a value object fails its own validation (bundle, rep object, matrix)
struct ValidationError final : InputError {
  explicit ValidationError(const std::string& what) : InputError("ValidationError", what) {}
};

struct WeightMismatch final : InputError {
  explicit WeightMismatch(const std::string& what) : InputError("WeightMismatch", what) {}
};

struct LevelOutOfRange final : InputError {
  explicit LevelOutOfRange(const std::string& what) : InputError("LevelOutOfRange", what) {}
};

struct ZeroRank final : InputError {
  explicit ZeroRank(const std::string& what) : InputError("ZeroRank", what) {}
};

struct NonPositiveBase final : MathError {
  explicit NonPositiveBase(const std::string& what) : MathError("NonPositiveBase", what) {}
};

// odd puncture count, so no logarithmic theta characteristic
struct ParityError final : MathError {
  explicit ParityError(const std::string& what) : MathError("ParityError", what) {}
};

// width and weight of different parity
struct WidthParityError final : MathError {
  explicit WidthParityError(const std::string& what) : MathError("WidthParityError", what) {}
};

struct WidthOutOfRange final : MathError {
  explicit WidthOutOfRange(const std::string& what) : MathError("WidthOutOfRange", what) {}
};

struct PositivityViolation final : MathError {
  explicit PositivityViolation(const std::string& what) : MathError("PositivityViolation", what) {}
};

// Hodge numbers do not weakly increase toward the middle
struct NotMaximalShape final : MathError {
  explicit NotMaximalShape(const std::string& what) : MathError("NotMaximalShape", what) {}
};

struct CaseParityError final : MathError {
  explicit CaseParityError(const std::string& what) : MathError("CaseParityError", what) {}
};

}  // namespace higgs
