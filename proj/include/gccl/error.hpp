#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gccl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed context / schema / CSV input; line is 1-based, 0 = unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Corrupt persisted state; offset is the byte position where reading failed.
class LoadError : public Error {
public:
    LoadError(const std::string& what, std::size_t byte_offset)
        : Error("byte " + std::to_string(byte_offset) + ": " + what), offset_(byte_offset) {}

    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Inconsistent scale schema (duplicate scaled attribute names and the like).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Cell value outside its declared domain; coordinates are 1-based.
class DataError : public Error {
public:
    DataError(const std::string& what, std::size_t row, std::size_t column)
        : Error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
          row_(row),
          column_(column) {}

    std::size_t row() const { return row_; }
    std::size_t column() const { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

// Set or operator used against a context generation it was not built for.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Increment batch rejected; the learning state is left untouched.
class BatchError : public Error {
public:
    using Error::Error;
};

}  // namespace gccl
