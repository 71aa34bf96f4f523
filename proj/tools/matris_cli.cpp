// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "matris/cli.hpp"

int main(int argc, char** argv)
{
    return matris::run_cli(argc, argv, std::cout, std::cerr);
}
