// Copyright 2026 The ptyq developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception hierarchy. Every failure raised by the library derives from
 * ptyq::Error so callers can map the whole family to one exit path.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ptyq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
    using Error::Error;
};
struct DimensionTooSmallError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct IndexOutOfRangeError : Error {
    using Error::Error;
};
struct InvalidApertureError : Error {
    using Error::Error;
};
struct InvalidModePlanError : Error {
    using Error::Error;
};
struct ShiftOutOfRangeError : Error {
    using Error::Error;
};
struct CoverageViolationError : Error {
    using Error::Error;
};
struct OverlapViolationError : Error {
    using Error::Error;
};
struct EnvelopeZeroError : Error {
    using Error::Error;
};
struct InvalidShotsError : Error {
    using Error::Error;
};
struct NegativeDataError : Error {
    using Error::Error;
};
struct NonFiniteDataError : Error {
    using Error::Error;
};
struct InvalidConfigError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace ptyq
