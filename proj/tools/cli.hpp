// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string_view>

namespace spikecrypt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

/// Message used when a command needs sample text and none is given.
inline constexpr std::string_view kSampleMessage = "initializers.initFileServer.initFileServer";

/// Runs the command line. Normal output goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on invalid input and 2 on internal failure or
/// training that did not converge.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spikecrypt::cli
