// Copyright 2026 The wittzeta Authors.
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

namespace wittzeta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WITTZETA_DEFINE_ERROR(Name)               \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

WITTZETA_DEFINE_ERROR(ParseError);
WITTZETA_DEFINE_ERROR(NonUnitConstantTerm);
WITTZETA_DEFINE_ERROR(ZeroPolynomial);
WITTZETA_DEFINE_ERROR(NotPrime);
WITTZETA_DEFINE_ERROR(DegreeZero);
WITTZETA_DEFINE_ERROR(PrecisionMismatch);
WITTZETA_DEFINE_ERROR(RingMismatch);
WITTZETA_DEFINE_ERROR(NonIntegral);
WITTZETA_DEFINE_ERROR(TorsionUnsupported);
WITTZETA_DEFINE_ERROR(PrecisionTooLow);
WITTZETA_DEFINE_ERROR(BudgetExceeded);
WITTZETA_DEFINE_ERROR(CensusInconsistent);
WITTZETA_DEFINE_ERROR(UnvaluedAtom);
WITTZETA_DEFINE_ERROR(UnsupportedClass);
WITTZETA_DEFINE_ERROR(NotRationalAtBound);
WITTZETA_DEFINE_ERROR(InvalidVariety);

#undef WITTZETA_DEFINE_ERROR

}  // namespace wittzeta
