/*
 * Copyright 2026 The ucount Authors
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

namespace ucount {

enum class Errc {
  ParseError,
  MultiEdgePresent,
  LoopPresent,
  UnorientedEdge,
  UnknownEdgeId,
  NotPlanarEmbedding,
  IncompleteRotation,
  MissingBasePairing,
  MismatchedSupport,
  DimensionTooLargeForOracle,
  NotConnected,
  NotSimple,
  OrientationNotVerifiedPfaffian,
  DegreeTooHigh,
  ZeroWeightEdge,
  NotCubic,
  CycleNotInGraph,
  OddCycle,
  SearchSpaceTooLarge,
  TensionPresent,
  NoSemiPfaffianOrientation,
  RoutingNotPlanar,
  TooManyVariables,
  ResourceLimit,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::MultiEdgePresent: return "MultiEdgePresent";
    case Errc::LoopPresent: return "LoopPresent";
    case Errc::UnorientedEdge: return "UnorientedEdge";
    case Errc::UnknownEdgeId: return "UnknownEdgeId";
    case Errc::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case Errc::IncompleteRotation: return "IncompleteRotation";
    case Errc::MissingBasePairing: return "MissingBasePairing";
    case Errc::MismatchedSupport: return "MismatchedSupport";
    case Errc::DimensionTooLargeForOracle: return "DimensionTooLargeForOracle";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotSimple: return "NotSimple";
    case Errc::OrientationNotVerifiedPfaffian: return "OrientationNotVerifiedPfaffian";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::ZeroWeightEdge: return "ZeroWeightEdge";
    case Errc::NotCubic: return "NotCubic";
    case Errc::CycleNotInGraph: return "CycleNotInGraph";
    case Errc::OddCycle: return "OddCycle";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::TensionPresent: return "TensionPresent";
    case Errc::NoSemiPfaffianOrientation: return "NoSemiPfaffianOrientation";
    case Errc::RoutingNotPlanar: return "RoutingNotPlanar";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ucount
