#pragma once

namespace hypvis {

/** Full command-line front end; returns the process exit status
 *  (0 success, 1 usage error, 2 computation error). */
int run_cli(int argc, const char* const* argv);

}  // namespace hypvis
