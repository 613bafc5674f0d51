// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/run.hpp>

int main( int argc, char** argv )
{
  return quarkcap::cli::run( argc, argv );
}
