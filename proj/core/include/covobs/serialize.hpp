// Copyright 2026 The covobs Authors
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

#include "covobs/distinction.hpp"
#include "covobs/measure.hpp"
#include "covobs/observable.hpp"
#include "covobs/phasespace.hpp"
#include "covobs/r3.hpp"
#include "covobs/resolution.hpp"

#include <string>
#include <string_view>

namespace covobs {

// JSON texts use a fixed key order and shortest round-trip number format,
// so equal inputs give byte-identical output.

/// {grid:{n,length}, density:[...], atoms:[[t,w],...]}
std::string to_json(const Measure1D &measure);
Measure1D measure_from_json(std::string_view text);

/// x,density rows for the density part; atoms are listed after a blank
/// line as location,weight rows.
std::string to_csv(const Measure1D &measure);

/// {max_deviation, trials, seed, pass, ...}
std::string to_json(const BatteryReport &report);
/// {gamma, tolerance, method, curve:[[alpha,g],...]}; infinite gamma is "inf".
std::string to_json(const ResolutionReport &report);
ResolutionReport resolution_from_json(std::string_view text);
std::string curve_csv(const ResolutionReport &report);
/// {relation, threshold, left_support, right_support, ...}
std::string to_json(const DistinctionVerdict &verdict);
std::string to_json(const SeparationReport &report);
std::string to_json(const ProductReport &report);
std::string to_json(const r3::RotationReport &report);

} // namespace covobs
