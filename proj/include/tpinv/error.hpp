/*
   Copyright 2026 The tpinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TPINV_ERROR_HPP
#define TPINV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpinv {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings or in polynomial rings of different arity.
class SpecMismatch : public Error {
   public:
    using Error::Error;
};

/// An index, size or count lies outside its admissible range.
class RangeError : public Error {
   public:
    using Error::Error;
};

/// Factorial-cost routine refused because the input is too large.
class SizeTooLarge : public Error {
   public:
    using Error::Error;
};

/// Malformed text. position() is the 0-based offset into the parsed string.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message), pos(position), msg(message) {}

    std::size_t position() const noexcept { return pos; }
    /// Description without the position prefix.
    const std::string& message() const noexcept { return msg; }

   private:
    std::size_t pos;
    std::string msg;
};

/// A variable x_j with j outside 1..nvars appeared in polynomial text.
class VariableOutOfRange : public ParseError {
   public:
    using ParseError::ParseError;
};

}  // namespace tpinv

#endif
