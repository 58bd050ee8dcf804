// Copyright 2026 The OLB Authors.
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

#include <stdexcept>
#include <string>

namespace olb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector lengths disagree or a vector is empty.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the operation's declared domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A solver or oracle failed to deliver a result it is contracted to deliver.
class OracleError : public Error {
 public:
  using Error::Error;
};

// Invalid user-facing configuration (CLI flags, JSON config).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace olb
