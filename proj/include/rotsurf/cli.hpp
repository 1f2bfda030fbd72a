// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rotsurf {

/// Command-line front end. Returns 0 on success, 1 when a check or an
/// expected verdict fails, 2 on usage, domain or degeneracy errors.
int cli_main(int argc, const char* const* argv);

}  // namespace rotsurf
