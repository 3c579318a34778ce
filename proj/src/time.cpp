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

#include "regaudit/time.hpp"

#include <cctype>
#include <cstdio>

#include "regaudit/errors.hpp"

namespace regaudit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

int64_t days_from_civil(int year, int month, int day) {
    // Howard Hinnant's algorithm; exact over the proleptic Gregorian calendar.
    const int64_t y = year - (month <= 2 ? 1 : 0);
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t days, int& year, int& month, int& day) {
    days += 719468;
    const int64_t era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    year = static_cast<int>(y + (month <= 2 ? 1 : 0));
}

int32_t parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2))) {
        throw SchemaViolation("invalid date: '" + std::string(text) + "'");
    }
    const int year = to_int(text.substr(0, 4));
    const int month = to_int(text.substr(5, 2));
    const int day = to_int(text.substr(8, 2));
    if (month < 1 || month > 12 || day < 1 || day > 31) {
        throw SchemaViolation("invalid date: '" + std::string(text) + "'");
    }
    return static_cast<int32_t>(days_from_civil(year, month, day));
}

std::string format_date(int32_t days) {
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
    return buf;
}

int64_t parse_rfc3339(std::string_view text) {
    // Date part plus 'T', "HH:MM:SS", then 'Z' or a +/-HH:MM offset.
    if (text.size() < 20 || (text[10] != 'T' && text[10] != 't')) {
        throw SchemaViolation("invalid timestamp: '" + std::string(text) + "'");
    }
    const int64_t day = parse_date(text.substr(0, 10));
    const std::string_view clock = text.substr(11);
    if (clock.size() < 9 || clock[2] != ':' || clock[5] != ':' ||
        !all_digits(clock.substr(0, 2)) || !all_digits(clock.substr(3, 2)) ||
        !all_digits(clock.substr(6, 2))) {
        throw SchemaViolation("invalid timestamp: '" + std::string(text) + "'");
    }
    const int hh = to_int(clock.substr(0, 2));
    const int mm = to_int(clock.substr(3, 2));
    const int ss = to_int(clock.substr(6, 2));
    if (hh > 23 || mm > 59 || ss > 60) {
        throw SchemaViolation("invalid timestamp: '" + std::string(text) + "'");
    }
    const std::string_view tail = clock.substr(8);
    int64_t offset = 0;
    if (tail == "Z" || tail == "z") {
        offset = 0;
    } else if (tail.size() == 6 && (tail[0] == '+' || tail[0] == '-') && tail[3] == ':' &&
               all_digits(tail.substr(1, 2)) && all_digits(tail.substr(4, 2))) {
        offset = to_int(tail.substr(1, 2)) * 3600 + to_int(tail.substr(4, 2)) * 60;
        if (tail[0] == '-') offset = -offset;
    } else {
        throw SchemaViolation("invalid timestamp offset: '" + std::string(text) + "'");
    }
    return day * kSecondsPerDay + hh * 3600 + mm * 60 + ss - offset;
}

std::string format_rfc3339(int64_t seconds) {
    int64_t day = seconds / kSecondsPerDay;
    int64_t rem = seconds % kSecondsPerDay;
    if (rem < 0) {
        rem += kSecondsPerDay;
        day -= 1;
    }
    int y, m, d;
    civil_from_days(day, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

}  // namespace regaudit
