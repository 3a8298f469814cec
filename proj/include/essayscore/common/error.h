/* Copyright 2026 The essayscore Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ESSAYSCORE_COMMON_ERROR_H_
#define ESSAYSCORE_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace essayscore {

// Base class for every error raised by the library. Callers that only care
// about "something in essayscore failed" catch this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (dataset rows, files, CLI values).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

// Numerical failure during training (non-finite loss or gradient).
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace essayscore

#endif  // ESSAYSCORE_COMMON_ERROR_H_
