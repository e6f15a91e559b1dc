// Copyright 2026 The voicecomp Authors.
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

namespace voicecomp {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input data (corpus lines, gold text, model files).
class DataError : public Error {
 public:
  using Error::Error;
};

// A caller violated an operation's contract (length mismatch, bad config).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A request was rejected before processing (over-length input, bad field).
class RequestError : public Error {
 public:
  using Error::Error;
};

// A model adapter failed while producing a completion.
class AdapterError : public Error {
 public:
  AdapterError(std::string adapter, const std::string& what)
      : Error("adapter '" + adapter + "': " + what), adapter_(std::move(adapter)) {}

  const std::string& adapter() const noexcept { return adapter_; }

 private:
  std::string adapter_;
};

}  // namespace voicecomp
