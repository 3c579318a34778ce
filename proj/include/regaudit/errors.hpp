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

#include <stdexcept>
#include <string>

namespace regaudit {

// Base class for every error raised by the library. Commands map these to
// exit codes, so new error kinds should derive from one of the two roots
// below rather than from Error directly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data or arguments (exit code 1 at the CLI).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem and journal failures (exit code 2 at the CLI).
class IoError : public Error {
public:
    using Error::Error;
};

class MalformedAccession : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SchemaViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoFailure : public IoError {
public:
    using IoError::IoError;
};

class DegenerateSigma : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InsufficientHistory : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroVariance : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IncompleteWindow : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroShock : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateVariance : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RankDeficient : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TooFewClusters : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MissingMoments : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TooManyFeatures : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class JournalCorrupt : public IoError {
public:
    using IoError::IoError;
};

class GraphCycle : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidSpec : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace regaudit
