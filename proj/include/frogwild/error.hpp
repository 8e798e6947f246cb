/*
 * Copyright 2026 The FrogWild Simulator Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROGWILD_ERROR_HPP
#define FROGWILD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frogwild {

/// Failure categories surfaced by the core. The numeric values are shared
/// with the C API status codes in frogwild.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kIo = 3,
  kParse = 4,
  kEmptyGraph = 5,
  kNotConverged = 6,
  kTooLarge = 7,
  kInternal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frogwild

#endif  // FROGWILD_ERROR_HPP
