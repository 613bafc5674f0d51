// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/report.hpp>
#include <quarkcap/common/error.hpp>

#include <cstdio>
#include <fstream>

namespace quarkcap::cli
{

std::string capacity_string( double bits )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.6f", bits );
  return buf;
}

json class_summary( std::string const& name, boolfn::function_class const& c, std::vector<unsigned> const& degrees )
{
  json j;
  j["class"] = name;
  j["n"] = c.arity();
  j["degrees"] = degrees;
  j["exact_count"] = c.size();
  j["capacity_bits"] = c.empty() ? std::string( "-inf" ) : capacity_string( boolfn::capacity( c ) );
  return j;
}

namespace
{

std::string csv_field( std::string const& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
  {
    return s;
  }
  std::string out = "\"";
  for ( auto ch : s )
  {
    if ( ch == '"' )
    {
      out += '"';
    }
    out += ch;
  }
  return out + "\"";
}

void csv_line( std::string& out, std::vector<std::string> const& fields )
{
  for ( std::size_t i = 0; i < fields.size(); ++i )
  {
    out += ( i ? "," : "" ) + csv_field( fields[i] );
  }
  out += '\n';
}

} // namespace

std::string to_csv( table const& t )
{
  std::string out;
  csv_line( out, t.header );
  for ( auto const& r : t.rows )
  {
    csv_line( out, r );
  }
  return out;
}

json make_report( std::string const& command, global_options const& opts, outcome const& o, double seconds )
{
  json r;
  r["schema"] = schema_tag;
  r["command"] = command;
  r["seed"] = opts.seed;
  r["results"] = o.results;
  r["verdict"] = o.verdict;
  if ( opts.timing )
  {
    r["duration_s"] = seconds;
  }
  return r;
}

void write_text( std::string const& path, std::string const& text )
{
  std::ofstream os( path, std::ios::binary );
  if ( !os )
  {
    throw usage_error( "cannot write '" + path + "'" );
  }
  os << text;
  if ( !os )
  {
    throw usage_error( "failed writing '" + path + "'" );
  }
}

} // namespace quarkcap::cli
