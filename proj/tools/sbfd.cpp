// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "sbfd/run.hpp"

int main(int argc, char **argv)
{
  return sbfd::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
