// Copyright 2026 The lpnc Authors
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

#ifndef LPNC_ERRORS_H_
#define LPNC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lpnc {

/// A bitstring handed to a cost function lies outside the encoding's
/// feasible subspace.
class InfeasibleAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The affine fit between a Hamiltonian and its cost function left a
/// nonzero residual; the Hamiltonian does not encode the cost.
class CalibrationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested engine has no semantics for a gate in the circuit.
class UnsupportedGate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lpnc

#endif  // LPNC_ERRORS_H_
