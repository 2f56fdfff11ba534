#pragma once

namespace omq {

// Entry point of the omq tool; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace omq
