// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/function_class.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quarkcap::cli
{

using json = nlohmann::ordered_json;

inline constexpr char const* schema_tag = "quarkcap/1";

/*! \brief Flags shared by every subcommand. */
struct global_options
{
  std::string out;
  bool csv = false;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  bool timing = false;
};

/*! \brief Rows of a tabular payload. */
struct table
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/*! \brief What a subcommand produced. */
struct outcome
{
  json results = json::object();
  bool verdict = true;
  std::optional<table> csv;
  /*! \brief Set when the command already wrote its --out file (class or network file). */
  bool out_consumed = false;
};

/*! \brief Capacity in bits with six decimals. */
std::string capacity_string( double bits );

/*! \brief {class, n, degrees, exact_count, capacity_bits}. */
json class_summary( std::string const& name, boolfn::function_class const& c, std::vector<unsigned> const& degrees );

std::string to_csv( table const& t );

/*! \brief Full report: schema, command echo, seed, results, verdict (and duration with --timing). */
json make_report( std::string const& command, global_options const& opts, outcome const& o, double seconds );

void write_text( std::string const& path, std::string const& text );

} // namespace quarkcap::cli
