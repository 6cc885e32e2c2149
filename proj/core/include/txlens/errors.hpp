#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace txlens {

// Bad input content: malformed files, out-of-range values, shape mismatches.
// The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed dataset record; carries the 1-based number of the first bad line.
class RecordError : public DataError {
public:
    RecordError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Environment failures: unwritable paths, broken transports. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Node RPC failure modes.
class RpcError : public std::runtime_error {
public:
    enum class Kind { NotFound, Transport, MalformedResponse };

    RpcError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace txlens
