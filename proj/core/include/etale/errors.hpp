// Copyright 2026 The etale Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace etale {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A catalog entry or user-supplied object failed its invariants. `entry()`
/// names the offending catalog id when there is one.
class ValidationError : public Error {
 public:
  ValidationError(std::string entry, const std::string& what)
      : Error(entry.empty() ? what : entry + ": " + what), entry_(std::move(entry)) {}
  const std::string& entry() const noexcept { return entry_; }

 private:
  std::string entry_;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class InconsistentData : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class BadCertificate : public Error {
 public:
  using Error::Error;
};

class ExpansionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace etale
