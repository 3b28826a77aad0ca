#pragma once

#include <stdexcept>
#include <string>

namespace tw {

enum class ErrorKind {
  OccupiedPosition,
  IllegalAttachment,
  NoAttachmentRecord,
  InvalidTileSet,
  Encoding,
  Decode,
  Address,
  AddressRange,
  EmptyEntry,
  Selection,
  EntryFormat,
  TableFormat,
  Class,
  RepresentationIntegrity,
  IllegalEvent,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library is an Error; `kind()` lets callers and
// tests tell the contract violations apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class IllegalAttachmentError : public Error {
 public:
  IllegalAttachmentError(const std::string& what, int strength)
      : Error(ErrorKind::IllegalAttachment, what), strength_(strength) {}

  // Binding strength the rejected tile would have had.
  int strength() const noexcept { return strength_; }

 private:
  int strength_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tw
