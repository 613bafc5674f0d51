// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quarkcap
{

using rational = mpq_class;

/*! \brief Lossless text form.
 *
 * Values whose denominator divides a power of ten are written as plain
 * decimals ("-0.25", "3"); everything else as "p/q".
 */
std::string to_string( rational const& q );

/*! \brief Parses "p/q", integers and decimals with an optional exponent. */
rational parse_rational( std::string_view text );

/*! \brief Exact conversion of a finite double. */
rational from_double( double value );

inline double to_double( rational const& q ) { return q.get_d(); }

rational abs( rational const& q );

} // namespace quarkcap
