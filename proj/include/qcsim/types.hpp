// Copyright 2026 The qcsim Authors
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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcsim {

using Complex = std::complex<double>;
using Index = std::uint64_t;

/// Largest register the language admits; basis indices stay in one 64-bit word.
inline constexpr int kMaxQubits = 63;

/// Base class for every error raised by the simulator. The category selects
/// the CLI exit code.
class Error : public std::runtime_error {
 public:
  enum class Category { kParse = 2, kValidate = 3, kRuntime = 4, kResource = 5 };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(Category::kParse,
              (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Category::kValidate, what) {}
};

class ExecutionError : public Error {
 public:
  explicit ExecutionError(const std::string& what) : Error(Category::kRuntime, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(Category::kResource, what) {}
};

}  // namespace qcsim
