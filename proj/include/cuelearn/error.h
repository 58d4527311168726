// Copyright 2026 The cuelearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUELEARN_ERROR_H_
#define CUELEARN_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuelearn {

// Malformed input data: bad labels, unknown enum values, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse failure tied to a location in a file.
class ParseError : public InputError {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : InputError(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Parameters that cannot be satisfied by the data, e.g. more folds than rows.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cuelearn

#endif  // CUELEARN_ERROR_H_
