#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace supchar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic on cyclotomic values drawn from fields of different root order.
class OrderMismatch : public Error {
 public:
  OrderMismatch(int lhs, int rhs)
      : Error("cyclotomic order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// More than 64 classes, or a generator parameter outside its supported range.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct TableViolation {
  std::string check;
  std::string detail;

  std::string to_string() const { return check + ": " + detail; }
};

class InvalidTable : public Error {
 public:
  explicit InvalidTable(std::vector<TableViolation> violations)
      : Error(summarize(violations)), violations_(std::move(violations)) {}

  const std::vector<TableViolation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<TableViolation>& v) {
    std::string msg = "invalid character table";
    for (const auto& item : v) msg += "\n  " + item.to_string();
    return msg;
  }

  std::vector<TableViolation> violations_;
};

}  // namespace supchar
