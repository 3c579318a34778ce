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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace regaudit {

// EDGAR-style accession number. The first ten digits identify the filer,
// which for insider forms is the reporting owner rather than the issuer.
struct AccessionNumber {
    uint64_t filer_cik = 0;  // > 0, at most 10 digits
    int year = 0;            // two-digit filing year
    int sequence = 0;        // six-digit per-filer sequence

    // "DDDDDDDDDD-YY-NNNNNN"; round-trips through parse_accession bit-exactly.
    std::string canonical() const;

    auto operator<=>(const AccessionNumber&) const = default;
};

// Accepts the canonical dashed form and the dashless 18-digit form, with
// surrounding whitespace tolerated. Throws MalformedAccession otherwise.
AccessionNumber parse_accession(std::string_view raw);

}  // namespace regaudit
