// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "ordscale/cli.hpp"

int main(int argc, char** argv)
{
    return ordscale::cli::run(argc, argv, std::cout, std::cerr);
}
