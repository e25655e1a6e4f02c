#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zf {

/// Invalid graph construction or graph-operation arguments.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 decode failure; carries the byte offset of the offending input byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Unknown generator family or invalid family parameters.
class GenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Refusal to run an exhaustive enumeration past its configured cap.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zf
