// Copyright 2026 The cavitygates Authors
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

namespace cavitygates {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CAVITYGATES_DEFINE_ERROR(Name) \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

CAVITYGATES_DEFINE_ERROR(DimensionMismatch);
CAVITYGATES_DEFINE_ERROR(NotHermitian);
CAVITYGATES_DEFINE_ERROR(NotUnitary);
CAVITYGATES_DEFINE_ERROR(IndexOutOfRange);
CAVITYGATES_DEFINE_ERROR(InvalidQuantumNumbers);
CAVITYGATES_DEFINE_ERROR(DegenerateParams);
CAVITYGATES_DEFINE_ERROR(NotEquivalent);
CAVITYGATES_DEFINE_ERROR(InvalidBranch);
CAVITYGATES_DEFINE_ERROR(NotFactorable);
CAVITYGATES_DEFINE_ERROR(InvalidQubits);
CAVITYGATES_DEFINE_ERROR(ParseError);
CAVITYGATES_DEFINE_ERROR(InvalidArgument);

#undef CAVITYGATES_DEFINE_ERROR

}  // namespace cavitygates
