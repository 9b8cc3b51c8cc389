// Copyright 2026 The multiseg Authors.
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

#ifndef MULTISEG_ERRORS_HPP_
#define MULTISEG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multiseg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotLinked : public Error {
 public:
  using Error::Error;
};

class NotPresent : public Error {
 public:
  using Error::Error;
};

class NotStandardForm : public Error {
 public:
  using Error::Error;
};

class NotALadder : public Error {
 public:
  using Error::Error;
};

class NotProperLadder : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ReducibleProduct : public Error {
 public:
  using Error::Error;
};

}  // namespace multiseg

#endif  // MULTISEG_ERRORS_HPP_
