// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/cli/report.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quarkcap::cli
{

/*! \brief desk runs every check at full size; quick trims the largest sweeps. */
enum class verify_level
{
  desk,
  quick
};

verify_level parse_level( std::string_view text );

struct criterion_result
{
  unsigned id = 0;
  std::string name;
  bool verdict = false;
  json details = json::object();
};

inline constexpr unsigned criterion_count = 10;

/*! \brief Runs one of the self-checks 1..10. */
criterion_result verify_criterion( unsigned id, verify_level level, std::uint64_t seed, unsigned jobs );

/*! \brief All self-checks in order. */
std::vector<criterion_result> verify_all( verify_level level, std::uint64_t seed, unsigned jobs );

} // namespace quarkcap::cli
