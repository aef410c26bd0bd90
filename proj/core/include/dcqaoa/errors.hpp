// Copyright 2026 The dcqaoa Authors
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

namespace dcqaoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or JSON input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input violates a structural invariant (self-loop, duplicate edge, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Operation refused because the instance exceeds a configured size limit.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Random graph generation gave up after its retry cap.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// No path-shaped separator shorter than the qubit budget exists.
class ConnectivityError : public Error {
 public:
  ConnectivityError(std::size_t node_count, std::size_t k)
      : Error("G has connectivity above k (k=" + std::to_string(k) + ", subgraph of " +
              std::to_string(node_count) + " nodes)"),
        node_count_(node_count),
        k_(k) {}
  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t node_count_;
  std::size_t k_;
};

/// A split failed to shrink the graph.
class ProgressError : public Error {
 public:
  using Error::Error;
};

/// Combining two child maps produced no compatible pair.
class ReconstructionError : public Error {
 public:
  ReconstructionError(std::size_t level, const std::string& what)
      : Error("reconstruction failed at level " + std::to_string(level) + ": " + what),
        level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

}  // namespace dcqaoa
