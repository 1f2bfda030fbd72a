// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/cli.hpp"

int main(int argc, char** argv) { return rotsurf::cli_main(argc, argv); }
