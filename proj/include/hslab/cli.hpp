#pragma once

namespace hslab {

// Full command-line front end.  Returns the process exit code: 0 on success,
// 1 when a computation or check fails, 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace hslab
