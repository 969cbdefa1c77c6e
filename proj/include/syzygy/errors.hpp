#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SYZYGY_ERROR(Name)                  \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

SYZYGY_ERROR(DimensionMismatch);
SYZYGY_ERROR(PreconditionViolation);
SYZYGY_ERROR(InternalConsistency);
SYZYGY_ERROR(NotNilpotent);
SYZYGY_ERROR(IllFormedRelation);
SYZYGY_ERROR(PathTooLong);
SYZYGY_ERROR(RelationViolation);
SYZYGY_ERROR(ZeroModule);
SYZYGY_ERROR(ExtensionFieldAmbiguity);
SYZYGY_ERROR(CatalogOpen);
SYZYGY_ERROR(LoopsPresent);
SYZYGY_ERROR(NonpositiveCycle);
SYZYGY_ERROR(InvalidExponents);

#undef SYZYGY_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace syzygy
