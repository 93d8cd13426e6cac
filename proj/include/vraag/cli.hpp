#pragma once

namespace vraag {

// Exit codes: 0 yes/pass, 1 no/fail, 2 unknown, 3 input or usage error,
// 4 cap exceeded (truncated enumeration or unsaturated completion).
int cli_main(int argc, const char* const* argv);

}  // namespace vraag
