// Copyright 2026 The Singleton Lab Authors
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

#ifndef SINGLETON_LAB_ERROR_H
#define SINGLETON_LAB_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace singleton_lab {

enum class Errc {
    InvalidArgument,
    // gf
    NonPrimeCharacteristic,
    FieldTooLarge,
    LengthExceedsField,
    EnumerationBudgetExceeded,
    TooManyErasures,
    InconsistentReceived,
    // qstate
    UnknownLabel,
    DuplicateLabel,
    NonHermitianInput,
    NegativeEigenvalue,
    OverlappingBlocks,
    BudgetExceeded,
    DimensionBudgetExceeded,
    // stabilizer
    NonCommutingGenerators,
    DependentGenerators,
    InconsistentPhases,
    // bounds
    InvalidParams,
    SigmaOutOfRange,
    DeltaOutOfRange,
    // propagate
    KTooSmall,
    NotPure,
    CTooLarge,
    DTooSmall,
    SoundnessViolation,
    NotMaximallyMixedOnBin,
    DecouplingFailed,
    // verify
    BadBlockSizes,
    StateNotPure,
    NotCorrectable,
    ParityMismatch,
    DistanceBelowHalf,
    // cli / io
    ParseError,
};

std::string_view errc_name(Errc code);

/// Base of every exception thrown by the library. The code identifies the
/// failed precondition; the message carries the offending values.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) { throw Error(code, what); }

}  // namespace singleton_lab

#endif
