// SPDX-License-Identifier: Apache-2.0
//
// risfade: Doppler and multipath fading simulator for RIS-assisted mobile links
// Copyright (C) 2026 The risfade authors
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

#ifndef RISFADE_ERRORS_HPP
#define RISFADE_ERRORS_HPP

#include <stdexcept>

namespace risfade
{
    // Violated precondition on the shape of an input (wrong scenario kind, length mismatch, ...)
    class ContractError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    // Numeric argument outside the domain of a formula
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Requested work exceeds a configured budget (permutation search cap)
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
