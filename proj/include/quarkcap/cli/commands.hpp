// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/cli/report.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace quarkcap::cli
{

struct enumerate_args
{
  unsigned n = 2;
  unsigned d = 1;
  std::string strategy = "auto";
  unsigned weight_bound = 12;
  unsigned cross_check = 0;
  bool members = false;
};

struct compose_args
{
  std::string b = "AND";
  unsigned n = 2;
  std::string degrees = "1,1";
  std::string encoding = "pm";
};

struct verify_args
{
  std::string what;
  std::string b = "AND";
  unsigned n = 2;
  std::string degrees = "1,1";
  std::string f_kind = "sign";
  std::string g_kind = "sign";
  unsigned m = 1;
  std::optional<std::uint64_t> sample;
  unsigned gated_index = 1;
  std::string level = "desk";
  unsigned criterion = 0;
};

struct construct_args
{
  std::string what;
  /* mux */
  unsigned m = 2;
  unsigned n = 2;
  std::string addressing = "dense";
  std::string readout = "or";
  /* product, embed */
  std::string table;
  std::string b = "AND";
  std::string f0;
  std::string f1;
  /* approx */
  unsigned slices = 10;
  std::string function = "square";
  std::string variant = "linear";
  unsigned grid = 10000;
};

struct simulate_args
{
  std::string net;
  std::string input;
  bool exact = false;
};

struct transformer_args
{
  unsigned n = 4;
  unsigned m = 3;
  unsigned din = 3;
  std::string check = "all";
  bool bias = false;
};

struct capacity_args
{
  unsigned max_n = 4;
};

outcome cmd_enumerate( enumerate_args const& a, global_options const& g );
outcome cmd_compose( compose_args const& a, global_options const& g );
outcome cmd_table2( unsigned n, global_options const& g );
outcome cmd_verify( verify_args const& a, global_options const& g );
outcome cmd_construct( construct_args const& a, global_options const& g );
outcome cmd_simulate( simulate_args const& a, global_options const& g );
outcome cmd_transformer( transformer_args const& a, global_options const& g );
outcome cmd_capacity_report( capacity_args const& a, global_options const& g );

} // namespace quarkcap::cli
