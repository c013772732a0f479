// Copyright 2026 The slopestc Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slopestc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed terrain/path text (bad header, bad token, truncated file).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Odd grid dimensions or a row/column count that disagrees with the header.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite elevation or otherwise out-of-domain value.
class ValueError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

// The free mega-cell graph splits into more than one component.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(std::size_t components)
      : Error("free mega-cell graph is disconnected: " +
              std::to_string(components) + " components"),
        components_(components) {}

  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

class NoEdgesError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// A path does not fit the terrain it is checked against.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace slopestc
