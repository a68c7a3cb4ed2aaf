// Copyright 2026 The fusionchain Authors
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

namespace fusionchain {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string &message);
    const std::string &kind() const noexcept {
        return kind_;
    }

   private:
    std::string kind_;
};

#define FUSIONCHAIN_ERROR(Name)                                    \
    class Name : public Error {                                    \
       public:                                                     \
        explicit Name(const std::string &message) : Error(#Name, message) { \
        }                                                          \
    };

FUSIONCHAIN_ERROR(CapExceeded)
FUSIONCHAIN_ERROR(DegenerateBicharacter)
FUSIONCHAIN_ERROR(InvalidBicharacter)
FUSIONCHAIN_ERROR(InvalidArgument)
FUSIONCHAIN_ERROR(NonAssociative)
FUSIONCHAIN_ERROR(DecomposableModule)
FUSIONCHAIN_ERROR(FSymbolsMissing)
FUSIONCHAIN_ERROR(NotSubgroup)
FUSIONCHAIN_ERROR(UnsupportedSystem)
FUSIONCHAIN_ERROR(UnknownTable)
FUSIONCHAIN_ERROR(RelationViolated)
FUSIONCHAIN_ERROR(MissingCenterAction)
FUSIONCHAIN_ERROR(NotExtensionsOfSameDuality)
FUSIONCHAIN_ERROR(UnsupportedExtension)
FUSIONCHAIN_ERROR(DisconnectedInclusion)
FUSIONCHAIN_ERROR(SchemaError)
FUSIONCHAIN_ERROR(InvariantViolation)

#undef FUSIONCHAIN_ERROR

}  // namespace fusionchain
