// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace quarkcap::cli
{

/*! \brief Entry point of the quarkcap tool.
 *
 * Returns 0 when every verdict holds, 2 when some verdict is false and 1 on
 * usage or domain errors.
 */
int run( int argc, char** argv );

} // namespace quarkcap::cli
