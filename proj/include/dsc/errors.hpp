/*
Copyright 2026 The dynshannon Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace dsc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bit source ran out of data before the requested bits were available.
class TruncatedStream : public Error {
public:
    explicit TruncatedStream(const std::string& what = "truncated bit stream") : Error(what) {}
};

// Encoded data is inconsistent with the coder state (bad codeword, bad header, ...).
class CorruptData : public Error {
public:
    using Error::Error;
};

// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A weight change would leave no code-tree satisfying the depth bounds.
class InfeasibleWeights : public Error {
public:
    using Error::Error;
};

}  // namespace dsc
