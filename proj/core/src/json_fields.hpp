// Copyright 2026 The safety_envelope Authors
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

#ifndef SAFETY_ENVELOPE__SRC__JSON_FIELDS_HPP_
#define SAFETY_ENVELOPE__SRC__JSON_FIELDS_HPP_

#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "safety_envelope/config.hpp"
#include "safety_envelope/types.hpp"

namespace safety_envelope::detail
{

using nlohmann::json;

void require_object(const json & value, std::string_view context);

/// Rejects keys outside `allowed`; catches typos in hand-written files.
void check_keys(const json & obj, std::initializer_list<std::string_view> allowed, std::string_view context);

double number_at(const json & obj, const char * key, std::string_view context);
double number_or(const json & obj, const char * key, double fallback, std::string_view context);

/// {"mps": x} or {"kmh": x}, in m/s.
double speed_value(const json & value, std::string_view context);

AssumptionSet parse_assumptions(const json & obj, AssumptionSet base);
RegulationParams parse_regulation(const json & obj, RegulationParams base);

json parse_document(std::string_view text, std::string_view context);

}  // namespace safety_envelope::detail

#endif  // SAFETY_ENVELOPE__SRC__JSON_FIELDS_HPP_
