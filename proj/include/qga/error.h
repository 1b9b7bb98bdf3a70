// Copyright 2026 The qga Authors.
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

#ifndef QGA_ERROR_H_
#define QGA_ERROR_H_

#include <stdexcept>
#include <string>

namespace qga {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (malformed JSON, bad line).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input parsed but violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unknown event type, role or registry entry.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Anything that goes wrong while talking to a generation backend.
class BackendError : public Error {
 public:
  using Error::Error;
};

// Connection or server-side failure that survived every retry.
class TransportError : public BackendError {
 public:
  TransportError(const std::string &what, int attempts)
      : BackendError(what + " (after " + std::to_string(attempts) +
                     " attempt" + (attempts == 1 ? "" : "s") + ")"),
        attempts_(attempts) {}

  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// The server answered, but not in the agreed wire format. Not retried.
class ProtocolError : public BackendError {
 public:
  using BackendError::BackendError;
};

// The oracle backend has no canned output for an input.
class OracleMissError : public BackendError {
 public:
  using BackendError::BackendError;
};

}  // namespace qga

#endif  // QGA_ERROR_H_
