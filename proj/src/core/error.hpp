// Copyright (c) 2026 the seglearn authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace seglearn::core {

enum class ErrorKind {
    invalid_argument,  // bad shapes, bad values, contract violations
    io,                // missing/unreadable/unwritable files
    parse,             // malformed corpus, config, or model files
    internal,          // bugs and guard trips
};

class SegError : public std::runtime_error {
public:
    SegError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
    throw SegError(ErrorKind::invalid_argument, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw SegError(ErrorKind::io, message);
}

[[noreturn]] inline void throw_parse(const std::string& message) {
    throw SegError(ErrorKind::parse, message);
}

[[noreturn]] inline void throw_internal(const std::string& message) {
    throw SegError(ErrorKind::internal, message);
}

}  // namespace seglearn::core
