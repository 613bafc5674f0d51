// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/run.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace
{

int run_args( std::vector<std::string> args )
{
  args.insert( args.begin(), "quarkcap" );
  std::vector<char*> argv;
  for ( auto& a : args )
  {
    argv.push_back( a.data() );
  }
  testing::internal::CaptureStdout();
  testing::internal::CaptureStderr();
  int const rc = quarkcap::cli::run( static_cast<int>( argv.size() ), argv.data() );
  testing::internal::GetCapturedStdout();
  testing::internal::GetCapturedStderr();
  return rc;
}

class temp_file
{
public:
  explicit temp_file( std::string const& name ) : path_( ( std::filesystem::temp_directory_path() / ( "quarkcap_cli_" + name ) ).string() ) {}
  ~temp_file() { std::remove( path_.c_str() ); }
  std::string const& path() const { return path_; }
  nlohmann::json read() const
  {
    std::ifstream is( path_ );
    return nlohmann::json::parse( is );
  }

private:
  std::string path_;
};

} // namespace

TEST( cli, enumerate_writes_the_class_file )
{
  temp_file f( "class.json" );
  EXPECT_EQ( run_args( { "--out", f.path(), "enumerate", "--n", "2" } ), 0 );
  auto const j = f.read();
  EXPECT_EQ( j["exact_count"], 14 );
  EXPECT_EQ( j["members"].size(), 14u );
}

TEST( cli, report_schema_and_timing )
{
  temp_file f( "report.json" );
  EXPECT_EQ( run_args( { "--out", f.path(), "verify", "composition", "--b", "AND", "--n", "3", "--d", "1,1" } ), 0 );
  auto const j = f.read();
  EXPECT_EQ( j["schema"], "quarkcap/1" );
  EXPECT_EQ( j["seed"], 0 );
  EXPECT_TRUE( j["verdict"].get<bool>() );
  EXPECT_FALSE( j.contains( "duration_s" ) );
  EXPECT_EQ( j["results"]["exact_count"], 246 );

  EXPECT_EQ( run_args( { "--timing", "--out", f.path(), "table2", "--n", "2" } ), 0 );
  EXPECT_TRUE( f.read().contains( "duration_s" ) );
}

TEST( cli, reports_are_deterministic )
{
  temp_file a( "a.json" ), b( "b.json" );
  EXPECT_EQ( run_args( { "--seed", "4", "--out", a.path(), "verify", "layer", "--n", "3", "--m", "2", "--sample", "200" } ), 0 );
  EXPECT_EQ( run_args( { "--seed", "4", "--out", b.path(), "verify", "layer", "--n", "3", "--m", "2", "--sample", "200" } ), 0 );
  EXPECT_EQ( a.read()["results"], b.read()["results"] );
  EXPECT_GT( a.read()["results"]["sampled_count"].get<int>(), 0 );
}

TEST( cli, construct_then_simulate )
{
  temp_file net( "xor.json" ), rep( "sim.json" );
  EXPECT_EQ( run_args( { "--out", net.path(), "construct", "xor" } ), 0 );
  EXPECT_EQ( run_args( { "--out", rep.path(), "simulate", "--net", net.path(), "--input", "0,0;0,1;1,0;1,1", "--exact" } ), 0 );
  auto const rows = rep.read()["results"]["rows"];
  ASSERT_EQ( rows.size(), 4u );
  std::vector<std::string> outs;
  for ( auto const& r : rows )
  {
    outs.push_back( r["outputs"][0].dump() );
  }
  EXPECT_EQ( outs, ( std::vector<std::string>{ "\"0\"", "\"1\"", "\"1\"", "\"0\"" } ) );
}

TEST( cli, errors_exit_with_one )
{
  EXPECT_EQ( run_args( { "nonsense" } ), 1 );
  EXPECT_EQ( run_args( { "enumerate" } ), 1 );
  EXPECT_EQ( run_args( { "verify", "composition", "--b", "FIRST", "--n", "3", "--d", "1,1" } ), 1 );
  EXPECT_EQ( run_args( { "verify", "layer", "--n", "3", "--m", "2" } ), 1 );
  EXPECT_EQ( run_args( { "enumerate", "--n", "9" } ), 1 );
  EXPECT_EQ( run_args( { "--help" } ), 0 );
}
