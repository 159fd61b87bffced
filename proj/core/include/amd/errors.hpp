// Copyright 2026 the amdlab authors
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

namespace amd {

// Thrown when user-supplied input fails structural validation: bad
// dimensions, values outside their domain, malformed parameter tables.
// The command-line front end maps this to its "invalid input" exit code.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// A structurally sound request whose size exceeds a hard enumeration or
// memory budget. Subclass of ValidationError so callers that only care
// about "reject vs. proceed" can catch one type.
class CapacityError : public ValidationError {
 public:
  explicit CapacityError(const std::string& what_arg)
      : ValidationError(what_arg) {}
};

}  // namespace amd
