// SPDX-License-Identifier: Apache-2.0
//
// risce: semi-blind channel estimation for RIS-assisted MIMO links
// Copyright (C) 2026 The risce authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace risce {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are not conformable.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Operand lacks a required structure (e.g. a non-diagonal matrix passed to vecd).
class StructureError : public Error {
  public:
    using Error::Error;
};

/// Input is degenerate for the requested operation (zero matrix, zero pilot entry, ...).
class DegenerateInputError : public Error {
  public:
    using Error::Error;
};

/// Invalid configuration value or unsupported option.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A least-squares system is rank deficient.
class EstimationSingularError : public Error {
  public:
    EstimationSingularError(const std::string& what, std::ptrdiff_t rank_found,
                            std::ptrdiff_t rank_required, int iteration = -1)
        : Error(what + " (rank " + std::to_string(rank_found) + " < " +
                std::to_string(rank_required) +
                (iteration >= 0 ? ", iteration " + std::to_string(iteration) : std::string()) +
                ")"),
          rank_found_(rank_found),
          rank_required_(rank_required),
          iteration_(iteration) {}

    std::ptrdiff_t rank_found() const noexcept { return rank_found_; }
    std::ptrdiff_t rank_required() const noexcept { return rank_required_; }
    /// Iteration at which the failure happened, or -1 outside an iterative solver.
    int iteration() const noexcept { return iteration_; }

    EstimationSingularError at_iteration(int iteration) const {
        std::string base = what();
        if (auto pos = base.find(" (rank "); pos != std::string::npos) base.resize(pos);
        return EstimationSingularError(base, rank_found_, rank_required_, iteration);
    }

  private:
    std::ptrdiff_t rank_found_;
    std::ptrdiff_t rank_required_;
    int iteration_;
};

/// Malformed text input (config or results file).
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace risce
