// Copyright 2026 The qtestfn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qtestfn {

/// Base class of every domain error thrown by the library. `name()` is the
/// stable identifier printed by the command line tool.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
    virtual const char *name() const noexcept = 0;
};

#define QTESTFN_DEFINE_ERROR(Type)                            \
    class Type : public Error {                               \
       public:                                                \
        using Error::Error;                                   \
        const char *name() const noexcept override {          \
            return #Type;                                     \
        }                                                     \
    }

/// An integer argument (qubit count, index) is outside its allowed range.
QTESTFN_DEFINE_ERROR(BoundsError);
/// Text could not be parsed as a function, state, circuit or fault.
QTESTFN_DEFINE_ERROR(ParseError);
/// Two bit vectors or tables that must agree in length do not.
QTESTFN_DEFINE_ERROR(LengthMismatch);
/// A vector does not have the dimension an operator acts on.
QTESTFN_DEFINE_ERROR(DimensionMismatch);
/// The function is not recursively symmetric/antisymmetric.
QTESTFN_DEFINE_ERROR(NotAdmissible);
/// A state vector is not a signed computational basis state.
QTESTFN_DEFINE_ERROR(NotBasisState);
/// A state vector has no single-qubit product factorization.
QTESTFN_DEFINE_ERROR(Entangled);
/// An explicit matrix or exhaustive check would exceed its size cap.
QTESTFN_DEFINE_ERROR(SizeCapExceeded);
/// A fault specification does not fit the pipeline it is applied to.
QTESTFN_DEFINE_ERROR(InvalidFault);

#undef QTESTFN_DEFINE_ERROR

}  // namespace qtestfn
