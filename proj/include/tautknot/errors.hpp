// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tautknot {

// Base for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-side errors: the caller handed us something malformed or out of domain.
struct InputError : Error {
    using Error::Error;
};

// Computation-side errors: the input was acceptable but the computation could
// not be carried to completion (degeneracy, iteration cap, underflow).
struct ComputeError : Error {
    using Error::Error;
};

struct DivisionByZero : InputError {
    using InputError::InputError;
};

struct NotExpandable : InputError {
    using InputError::InputError;
};

struct InvalidSequence : InputError {
    using InputError::InputError;
};

struct DegenerateTangent : ComputeError {
    using ComputeError::ComputeError;
};

struct GridTouch : ComputeError {
    using ComputeError::ComputeError;
};

struct NonConvergence : ComputeError {
    using ComputeError::ComputeError;
};

struct ShrinkLimit : ComputeError {
    using ComputeError::ComputeError;
};

struct InfeasibleEpsilon : ComputeError {
    using ComputeError::ComputeError;
};

struct InvalidTaut : ComputeError {
    using ComputeError::ComputeError;
};

} // namespace tautknot
