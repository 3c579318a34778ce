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

// CRC-64/XZ over a byte string. Integrity checking only, not cryptographic.
uint64_t crc64(std::string_view data);

std::string crc64_hex(uint64_t value);
uint64_t parse_crc64_hex(std::string_view hex);

}  // namespace regaudit
