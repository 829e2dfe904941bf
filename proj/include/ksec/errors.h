// Copyright 2026 The Authors.
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

#ifndef KSEC_ERRORS_H_
#define KSEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ksec {

// Root of the library's exception hierarchy. Out-of-range element labels are
// reported with std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A malformed instance spec, config file or flag.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The matroid has a loop on the active ground set; covering numbers and the
// secretary algorithm are undefined there.
class LoopError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exhaustive enumeration was requested on a ground set above its size cap.
class EnumerationLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A runtime guarantee failed, e.g. an accepted set exceeded the fold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ksec

#endif  // KSEC_ERRORS_H_
