/*
 * Copyright 2026 The Isobenefit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isobenefit {

enum class ErrorCode {
  // scene
  EmptyId,
  DuplicateId,
  NonFiniteValue,
  UnknownOverrideTarget,
  NonPositiveEfficiency,
  UnknownProfile,
  InvalidGrid,
  // field
  NegativeDistance,
  // indicators
  EmptyRaster,
  ZeroMean,
  ShapeMismatch,
  // isolines
  GridTooSmall,
  NoFiniteRange,
  InvalidLevel,
  // gravity
  EmptyChoiceSet,
  OriginOnAmenity,
  NonPositiveAttractiveness,
  CoincidentAmenities,
  NoInteriorMinimum,
  InvalidResolution,
  // io / cli
  Io,
  Parse,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyId: return "EmptyId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::UnknownOverrideTarget: return "UnknownOverrideTarget";
    case ErrorCode::NonPositiveEfficiency: return "NonPositiveEfficiency";
    case ErrorCode::UnknownProfile: return "UnknownProfile";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::EmptyRaster: return "EmptyRaster";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::NoFiniteRange: return "NoFiniteRange";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::EmptyChoiceSet: return "EmptyChoiceSet";
    case ErrorCode::OriginOnAmenity: return "OriginOnAmenity";
    case ErrorCode::NonPositiveAttractiveness: return "NonPositiveAttractiveness";
    case ErrorCode::CoincidentAmenities: return "CoincidentAmenities";
    case ErrorCode::NoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isobenefit
