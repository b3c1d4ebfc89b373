//
// Copyright (C) 2026 The relarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace relarm {

enum class ErrorKind {
    InvalidArgument,
    Io,
    Parse,
    Validation,
    Numerical,
};

/// Base exception for every failure raised by the core library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A problem located in an input table. Rows and columns are 1-based as a
/// text editor shows them (row 1 is the header line).
class DataError : public Error {
public:
    DataError(const std::string& file, std::size_t row, std::size_t column, const std::string& message)
        : Error(ErrorKind::Parse, locate(file, row, column) + message), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string locate(const std::string& file, std::size_t row, std::size_t column) {
        std::string s = file.empty() ? std::string("<input>") : file;
        s += ":" + std::to_string(row);
        if (column != 0)
            s += ":" + std::to_string(column);
        return s + ": ";
    }

    std::size_t row_;
    std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, const std::string& message) {
    if (!condition)
        throw Error(ErrorKind::InvalidArgument, message);
}

} // namespace relarm
