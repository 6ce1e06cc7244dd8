/*
 * Copyright 2026 The polybeam authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef POLYBEAM_ERROR_HPP
#define POLYBEAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polybeam {

/// Broad failure classes, mirrored one-to-one by the C API status codes.
enum class ErrorKind {
  invalid_argument,  // bad value: empty set, non-finite coordinate, size mismatch
  precondition,      // operation not applicable to this instance
  cap_exceeded,      // configurable work limit hit
  parse,             // malformed input document
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polybeam

#endif  // POLYBEAM_ERROR_HPP
