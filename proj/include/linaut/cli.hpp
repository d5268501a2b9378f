#pragma once

namespace linaut {

// Entry point of the linaut tool. Returns 0 for success / true verdicts,
// 1 for false verdicts (rejection, violations, non-equivalence), 2 for
// usage and parse errors.
int cli_main(int argc, char** argv);

} // namespace linaut
