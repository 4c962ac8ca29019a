// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "tonks_cli/cli.hpp"

int main(int argc, char** argv) {
  return tonks::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
