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

#include "singleton_lab/error.h"

namespace singleton_lab {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::LengthExceedsField: return "LengthExceedsField";
        case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case Errc::TooManyErasures: return "TooManyErasures";
        case Errc::InconsistentReceived: return "InconsistentReceived";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::NonHermitianInput: return "NonHermitianInput";
        case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
        case Errc::OverlappingBlocks: return "OverlappingBlocks";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
        case Errc::NonCommutingGenerators: return "NonCommutingGenerators";
        case Errc::DependentGenerators: return "DependentGenerators";
        case Errc::InconsistentPhases: return "InconsistentPhases";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::SigmaOutOfRange: return "SigmaOutOfRange";
        case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
        case Errc::KTooSmall: return "KTooSmall";
        case Errc::NotPure: return "NotPure";
        case Errc::CTooLarge: return "CTooLarge";
        case Errc::DTooSmall: return "DTooSmall";
        case Errc::SoundnessViolation: return "SoundnessViolation";
        case Errc::NotMaximallyMixedOnBin: return "NotMaximallyMixedOnBin";
        case Errc::DecouplingFailed: return "DecouplingFailed";
        case Errc::BadBlockSizes: return "BadBlockSizes";
        case Errc::StateNotPure: return "StateNotPure";
        case Errc::NotCorrectable: return "NotCorrectable";
        case Errc::ParityMismatch: return "ParityMismatch";
        case Errc::DistanceBelowHalf: return "DistanceBelowHalf";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace singleton_lab
