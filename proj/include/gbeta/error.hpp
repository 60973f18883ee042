// Copyright 2026 The gbeta Authors
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

#ifndef GBETA_ERROR_HPP
#define GBETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gbeta {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad system parameters (k < 1, unknown parity).
class invalid_parameter : public error {
public:
    using error::error;
};

/// An argument lies outside the domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed word or number literal.
class parse_error : public error {
public:
    using error::error;
};

/// The operation has no meaning for the requested parity.
class unsupported : public error {
public:
    using error::error;
};

} // namespace gbeta

#endif // GBETA_ERROR_HPP
