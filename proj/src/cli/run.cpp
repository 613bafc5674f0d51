// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/commands.hpp>
#include <quarkcap/cli/run.hpp>
#include <quarkcap/common/error.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace quarkcap::cli
{

int run( int argc, char** argv )
{
  CLI::App app{ "quarkcap: exact capacity laboratory for gated threshold networks" };
  app.require_subcommand( 1 );
  app.fallthrough();

  global_options g;
  app.add_option( "--out", g.out, "Write the report (or the class/network file) to this path" );
  app.add_flag( "--csv", g.csv, "Emit the tabular payload as CSV" );
  app.add_option( "--seed", g.seed, "Seed of the counter-based generator" );
  app.add_option( "--jobs", g.jobs, "Worker threads (default: QUARKCAP_JOBS, else hardware concurrency)" );
  app.add_flag( "--timing", g.timing, "Include the wall-clock duration in the report" );

  enumerate_args ea;
  auto* enumerate = app.add_subcommand( "enumerate", "Enumerate T(n;d)" );
  enumerate->add_option( "--n", ea.n )->required();
  enumerate->add_option( "--d", ea.d );
  enumerate->add_option( "--strategy", ea.strategy, "auto, sweep or weights" );
  enumerate->add_option( "--weight-bound", ea.weight_bound );
  enumerate->add_option( "--cross-check", ea.cross_check, "Random non-members re-checked by the LP (weights strategy)" );
  enumerate->add_flag( "--members", ea.members, "List members with certificates in the report" );

  compose_args ca;
  auto* compose = app.add_subcommand( "compose", "Enumerate T_B(n;d1,...,dk)" );
  compose->add_option( "--b", ca.b, "Operator name or hex table" )->required();
  compose->add_option( "--n", ca.n )->required();
  compose->add_option( "--d", ca.degrees, "Comma separated degrees" );
  compose->add_option( "--encoding", ca.encoding, "01 or pm" );

  unsigned t2n = 2;
  auto* t2 = app.add_subcommand( "table2", "All sixteen binary compositions at degree (1,1)" );
  t2->add_option( "--n", t2n )->required();

  verify_args va;
  std::uint64_t sample = 0;
  auto* verify = app.add_subcommand( "verify", "Exact checks: composition, synaptic, single-weight, layer, intersection, closure, all" );
  verify->add_option( "what", va.what )->required();
  verify->add_option( "--b", va.b );
  verify->add_option( "--n", va.n );
  verify->add_option( "--d", va.degrees );
  verify->add_option( "--f-kind", va.f_kind, "sign or heaviside" );
  verify->add_option( "--g-kind", va.g_kind, "sign or heaviside" );
  verify->add_option( "--m", va.m, "Hidden units (layer) or factor limit (closure)" );
  auto* sample_opt = verify->add_option( "--sample", sample, "Random configurations for a sampled lower bound (layer)" );
  verify->add_option( "--index", va.gated_index, "Gated weight, 1-based (single-weight)" );
  verify->add_option( "--level", va.level, "desk or quick (all)" );
  verify->add_option( "--criterion", va.criterion, "Run a single self-check (all)" );

  construct_args ka;
  auto* construct = app.add_subcommand( "construct", "Build networks: mux, product, xor, embed, approx" );
  construct->add_option( "what", ka.what )->required();
  construct->add_option( "--m", ka.m );
  construct->add_option( "--n", ka.n );
  construct->add_option( "--addressing", ka.addressing, "dense or sparse" );
  construct->add_option( "--readout", ka.readout, "or, and or product" );
  construct->add_option( "--table", ka.table, "Canonical form or value list" );
  construct->add_option( "--b", ka.b );
  construct->add_option( "--f0", ka.f0 );
  construct->add_option( "--f1", ka.f1 );
  construct->add_option( "--slices", ka.slices );
  construct->add_option( "--function", ka.function, "identity, square, sin, sqrt or abs" );
  construct->add_option( "--variant", ka.variant, "linear or constant" );
  construct->add_option( "--grid", ka.grid );

  simulate_args sa;
  auto* simulate = app.add_subcommand( "simulate", "Evaluate a network file" );
  simulate->add_option( "--net", sa.net )->required();
  simulate->add_option( "--input", sa.input, "CSV rows, inline (rows separated by ;) or as a file" )->required();
  simulate->add_flag( "--exact", sa.exact, "Exact rational evaluation (threshold networks)" );

  transformer_args ta;
  auto* tr = app.add_subcommand( "transformer", "Encoder built from gating operations" );
  tr->add_option( "--n", ta.n );
  tr->add_option( "--m", ta.m );
  tr->add_option( "--din", ta.din );
  tr->add_option( "--check", ta.check, "perm, oracle, counts or all" );
  tr->add_flag( "--bias", ta.bias, "Random projection biases" );

  capacity_args pa;
  auto* cap = app.add_subcommand( "capacity-report", "Exact capacities beside asymptotic reference curves" );
  cap->add_option( "--max-n", pa.max_n );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e );
    return code == 0 ? 0 : 1;
  }

  std::string command;
  for ( int i = 1; i < argc; ++i )
  {
    command += ( i > 1 ? " " : "" ) + std::string( argv[i] );
  }

  auto const start = std::chrono::steady_clock::now();
  try
  {
    outcome o;
    if ( *enumerate )
    {
      o = cmd_enumerate( ea, g );
    }
    else if ( *compose )
    {
      o = cmd_compose( ca, g );
    }
    else if ( *t2 )
    {
      o = cmd_table2( t2n, g );
    }
    else if ( *verify )
    {
      if ( sample_opt->count() > 0 )
      {
        va.sample = sample;
      }
      o = cmd_verify( va, g );
    }
    else if ( *construct )
    {
      o = cmd_construct( ka, g );
    }
    else if ( *simulate )
    {
      o = cmd_simulate( sa, g );
    }
    else if ( *tr )
    {
      o = cmd_transformer( ta, g );
    }
    else
    {
      o = cmd_capacity_report( pa, g );
    }
    double const seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();

    std::string text;
    if ( g.csv )
    {
      if ( !o.csv )
      {
        throw usage_error( "this command has no tabular payload" );
      }
      text = to_csv( *o.csv );
    }
    else
    {
      text = make_report( command, g, o, seconds ).dump( 2 ) + "\n";
    }
    if ( !g.out.empty() && !o.out_consumed )
    {
      write_text( g.out, text );
    }
    else
    {
      std::cout << text;
    }
    if ( !g.timing )
    {
      std::fprintf( stderr, "duration: %.3f s\n", seconds );
    }
    return o.verdict ? 0 : 2;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "quarkcap: " << e.what() << '\n';
    return 1;
  }
}

} // namespace quarkcap::cli
