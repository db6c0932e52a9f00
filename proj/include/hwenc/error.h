// Copyright 2026 The hwenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hwenc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// The Ehrlich generator has no marked bits left.
class SequenceExhausted : public Error {
   public:
    using Error::Error;
};

/// An Ehrlich state whose pivot has no valid swap partner.
class MalformedState : public Error {
   public:
    using Error::Error;
};

/// Circuit text (JSON or CSV input) did not match its schema.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// The simulator found a constructed circuit that does not prepare its target.
class VerificationError : public Error {
   public:
    VerificationError(std::string message, long gate_index)
        : Error(std::move(message)), gate_index_(gate_index) {}

    /// Index (into Circuit::gates) of the first gate that broke the loading invariant,
    /// or -1 when only the final state was wrong.
    long gate_index() const { return gate_index_; }

   private:
    long gate_index_;
};

}  // namespace hwenc
