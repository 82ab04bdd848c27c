// Copyright 2026 The Courant Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace courant {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A determinant vanishes identically; the nondegeneracy hypothesis fails.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A spanning set is generically linearly dependent.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Sections that live on different bundles were combined.
class HostMismatch : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis (e.g. "both constituents are Lie algebroids") fails.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

class NotTransverse : public Error {
 public:
  using Error::Error;
};

class NotIsotropic : public Error {
 public:
  using Error::Error;
};

class NotIntegrable : public Error {
 public:
  using Error::Error;
};

class NotHamiltonian : public Error {
 public:
  using Error::Error;
};

class NotNullDirac : public Error {
 public:
  using Error::Error;
};

class NotPoisson : public Error {
 public:
  using Error::Error;
};

/// Malformed expression or model text. Carries a 1-based line/column.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A model refers to a name that was never declared.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Ranks or dimensions of model entries disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace courant
