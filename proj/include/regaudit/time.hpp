// Copyright 2026 the regaudit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace regaudit {

inline constexpr int64_t kSecondsPerDay = 86400;

// Days since 1970-01-01 for a proleptic Gregorian date.
int64_t days_from_civil(int year, int month, int day);
void civil_from_days(int64_t days, int& year, int& month, int& day);

// "YYYY-MM-DD" <-> days since epoch.
int32_t parse_date(std::string_view text);
std::string format_date(int32_t days);

// RFC-3339 timestamp ("2024-03-31T16:00:00Z", offsets allowed) <-> UTC
// seconds since epoch. Fractional seconds are rejected.
int64_t parse_rfc3339(std::string_view text);
std::string format_rfc3339(int64_t seconds);

}  // namespace regaudit
