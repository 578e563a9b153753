/*
 *   Copyright 2026 The hyperlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HYPERLAB_ERRORS_HPP
#define HYPERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperlab {

/// Malformed input tables (wrong arity, out-of-range entries, empty products).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A call whose preconditions do not hold (empty product, improper ideal...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad (u, v) pair or similar numeric parameter.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured carrier cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A derived hyperring could not be built; the message carries the witness.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperlab

#endif  // HYPERLAB_ERRORS_HPP
