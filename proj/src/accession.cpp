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

#include "regaudit/accession.hpp"

#include <cctype>
#include <cstdio>

#include "regaudit/errors.hpp"

namespace regaudit {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return !s.empty();
}

uint64_t to_u64(std::string_view s) {
    uint64_t v = 0;
    for (char c : s) v = v * 10 + static_cast<uint64_t>(c - '0');
    return v;
}

}  // namespace

std::string AccessionNumber::canonical() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%010llu-%02d-%06d",
                  static_cast<unsigned long long>(filer_cik), year, sequence);
    return buf;
}

AccessionNumber parse_accession(std::string_view raw) {
    size_t begin = 0;
    size_t end = raw.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    const std::string_view body = raw.substr(begin, end - begin);

    std::string_view cik_part, year_part, seq_part;
    if (body.size() == 20 && body[10] == '-' && body[13] == '-') {
        cik_part = body.substr(0, 10);
        year_part = body.substr(11, 2);
        seq_part = body.substr(14, 6);
    } else if (body.size() == 18) {
        cik_part = body.substr(0, 10);
        year_part = body.substr(10, 2);
        seq_part = body.substr(12, 6);
    } else {
        throw MalformedAccession("accession has wrong length: '" + std::string(body) + "'");
    }
    if (!all_digits(cik_part) || !all_digits(year_part) || !all_digits(seq_part)) {
        throw MalformedAccession("accession has non-digit payload: '" + std::string(body) + "'");
    }

    AccessionNumber acc;
    acc.filer_cik = to_u64(cik_part);
    acc.year = static_cast<int>(to_u64(year_part));
    acc.sequence = static_cast<int>(to_u64(seq_part));
    if (acc.filer_cik == 0) {
        throw MalformedAccession("accession filer cik must be positive: '" + std::string(body) + "'");
    }
    return acc;
}

}  // namespace regaudit
