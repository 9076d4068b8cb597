// Copyright 2026 The nlgames Authors
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

#ifndef NLGAMES_ERROR_HPP_
#define NLGAMES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nlgames {

// A value violates a domain constraint (positivity, normalization,
// no-signaling, POVM admissibility, ...). The message names the constraint.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Input could not be parsed into a domain object (bad JSON, missing field,
// wrong arity).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlgames

#endif  // NLGAMES_ERROR_HPP_
