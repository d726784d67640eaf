// Copyright 2026 The Dilatia Authors
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

namespace dilatia {

// Error categories map onto CLI exit codes (see tools/dilatia.cpp).
enum class ErrorKind {
  kDimension,
  kConvergence,
  kContraction,
  kDomain,
  kArgument,
  kParse,
  kConfig,
  kInsufficientStatistics,
  kUnsupportedGate,
  kSize,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kDimension, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(ErrorKind::kConvergence,
              what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class ContractionViolation : public Error {
 public:
  explicit ContractionViolation(const std::string& what)
      : Error(ErrorKind::kContraction, what) {}
};

/// Non-Hermitian input, negative eigenvalue of a PSD operand, zero trace.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorKind::kArgument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorKind::kConfig, what) {}
};

class InsufficientStatistics : public Error {
 public:
  explicit InsufficientStatistics(const std::string& what)
      : Error(ErrorKind::kInsufficientStatistics, what) {}
};

class UnsupportedGate : public Error {
 public:
  explicit UnsupportedGate(const std::string& what)
      : Error(ErrorKind::kUnsupportedGate, what) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(ErrorKind::kSize, what) {}
};

}  // namespace dilatia
