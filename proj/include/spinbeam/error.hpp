// Copyright 2026 The spinbeam Authors
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

#ifndef SPINBEAM_ERROR_HPP
#define SPINBEAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spinbeam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input: bad builder parameters, invalid networks, mismatched sizes.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Index outside the basis (site ids, leg positions).
class OutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Experiment configuration problem. key() names the offending entry,
// e.g. "observable.j_nb.step".
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinbeam

#endif  // SPINBEAM_ERROR_HPP
