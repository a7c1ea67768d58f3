#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapmult {

// Malformed external input (graph6 text, bad family parameters). CLI exit 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}

    std::size_t offset;
};

// Input is well-formed but outside a supported bound (order, search size). CLI exit 3.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lapmult
