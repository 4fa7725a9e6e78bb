// Copyright 2026 The entpoly authors
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

namespace entpoly {

/// Input violating a documented precondition (bad dimensions, zero state,
/// malformed spec, ...). Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base of all numerical failures that abort a computation rather than
/// returning a silently wrong answer. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The singular-value (or eigenvalue) spectrum has no clean cut: the ratio
/// between the smallest accepted and largest rejected value is below the
/// configured guard, so no integer rank can be trusted.
class IllConditionedRank : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The rank path and the span-oracle path produced different subspace
/// dimensions for the same state. Always a bug or a conditioning failure,
/// never ignorable.
class MethodDisagreement : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An operator annihilates the state it is measured against, so its
/// state-dependent size is undefined.
class AnnihilatedState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Rejection sampling exceeded its attempt cap.
class SamplingFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A structural invariant that must hold exactly (integer traces, monotone
/// dimensions, coefficient sums) failed on computed data.
class InvariantViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Filesystem/serialization failure. Maps to CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entpoly
