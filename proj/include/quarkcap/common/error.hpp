// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace quarkcap
{

/*! \brief Base class of every error raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Arity or size outside the supported range. */
class arity_error : public error
{
public:
  using error::error;
};

/*! \brief A sign threshold evaluated exactly at zero. */
class ambiguous_sign : public error
{
public:
  ambiguous_sign() : error( "ambiguous sign: polynomial vanishes on a cube point" ) {}
};

/*! \brief Numeric domain violation (log of a non-positive value, bad margins, ...). */
class domain_error : public error
{
public:
  using error::error;
};

/*! \brief Malformed command line or input file. */
class usage_error : public error
{
public:
  using error::error;
};

/*! \brief A proven construction failed its own verification. */
class internal_error : public error
{
public:
  using error::error;
};

} // namespace quarkcap
