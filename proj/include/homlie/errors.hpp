#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Invalid input: bad files, mismatched registries, out-of-range indices.
/// CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Lexical or syntactic error in the expression language, with a byte offset.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

}  // namespace homlie
