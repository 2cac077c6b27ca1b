// Copyright 2026 The Catalyst Authors
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

#ifndef CATALYST_ERRORS_H
#define CATALYST_ERRORS_H

#include <stdexcept>
#include <string>

namespace catalyst {

/// Matrix shape does not fit the requested kernel (e.g. non-square Gram matrix).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands disagree on particle count or exchange statistics.
struct IncompatibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid arguments at an API or command-line boundary.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Base for failures that come from the physics of the requested state rather
/// than from malformed input.
struct PhysicsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested fermionic state has zero norm.
struct PauliForbiddenError : PhysicsError {
    using PhysicsError::PhysicsError;
};

struct NotFactorizableError : PhysicsError {
    using PhysicsError::PhysicsError;
};

struct NotReducibleError : PhysicsError {
    using PhysicsError::PhysicsError;
};

/// A brute-force request exceeds the configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace catalyst

#endif
