#pragma once

namespace triad {

// Exit codes: 0 success or query-true, 1 query-false, 2 invariant or runtime
// error, 3 parse error, 4 usage error.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace triad
