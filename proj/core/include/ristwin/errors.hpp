// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
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

#include <stdexcept>
#include <string>

namespace ristwin
{

/// Base class of all errors raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, wrong types, unknown keys).
class ParseError : public Error
{
  public:
    using Error::Error;
};

/// Vector lengths that must agree do not (config N vs. snapshot N, ...).
class DimensionError : public Error
{
  public:
    using Error::Error;
};

/// A precondition on an argument was violated.
class ArgumentError : public Error
{
  public:
    using Error::Error;
};

/// Requested search is too expensive (exhaustive search beyond 2^20).
class SearchGuardError : public Error
{
  public:
    using Error::Error;
};

} // namespace ristwin
