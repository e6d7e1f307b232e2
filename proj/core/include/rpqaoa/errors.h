// Copyright 2026 The rpqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RPQAOA_ERRORS_H
#define RPQAOA_ERRORS_H

#include <stdexcept>
#include <string>

namespace rpqaoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong bit length, mismatched spectra, degenerate fits.
class InvalidInputError : public Error {
   public:
    using Error::Error;
};

/// A size limit (qubit count, enumeration cap) was exceeded.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Unparseable external data (graph6, JSON records, CSV).
class FormatError : public Error {
   public:
    using Error::Error;
};

/// A value outside the mathematical domain of an evaluator, e.g. non-integer
/// costs handed to the angle-averaged formula.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Contradictory or incomplete run configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace rpqaoa

#endif  // RPQAOA_ERRORS_H
