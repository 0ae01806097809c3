// Copyright 2026 The Invisibility Authors
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

#ifndef INVIS_ERROR_H_
#define INVIS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace invis {

enum class ErrorKind {
  kInvalidInput,
  kUnsupportedDimension,
  kPreconditionViolation,
  kInfeasibleRecord,
  kIo,
  kParse,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library. `precondition()` names the violated
// condition (e.g. "center_of_mass_at_origin") and is empty for plain
// invalid-input, I/O and parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string precondition = {})
      : std::runtime_error(message), kind_(kind), precondition_(std::move(precondition)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& precondition() const { return precondition_; }

 private:
  ErrorKind kind_;
  std::string precondition_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidInput, message);
}

[[noreturn]] inline void throw_precondition(const std::string& name, const std::string& message) {
  throw Error(ErrorKind::kPreconditionViolation, message, name);
}

}  // namespace invis

#endif  // INVIS_ERROR_H_
