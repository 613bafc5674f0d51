// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/netsim/builders.hpp>
#include <quarkcap/netsim/evaluate.hpp>
#include <quarkcap/netsim/io.hpp>
#include <quarkcap/netsim/network.hpp>
#include <quarkcap/netsim/transforms.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

using namespace quarkcap;
using namespace quarkcap::netsim;

namespace
{

/* a -> c (identity, weight 1), c output-gated by b */
gating_network gated_copy()
{
  gating_network net;
  net.add_input( "a" );
  net.add_input( "b" );
  net.add_neuron( "c" );
  net.add_edge( "a", "c" );
  net.add_output_gate( "b", "c" );
  net.add_output( "c" );
  return net;
}

std::vector<double> random_inputs( std::mt19937_64& rng, std::size_t k )
{
  std::uniform_real_distribution<double> u( -2, 2 );
  std::vector<double> x( k );
  for ( auto& v : x )
  {
    v = u( rng );
  }
  return x;
}

} // namespace

TEST( netsim, output_gate_multiplies )
{
  std::vector<double> in{ 5, 6 };
  auto const r = evaluate( gated_copy(), in );
  EXPECT_DOUBLE_EQ( r.outputs.front(), 30.0 );
  EXPECT_EQ( r.trace.output_gating_ops, 1u );
  EXPECT_EQ( r.trace.synaptic_gating_ops, 0u );
}

TEST( netsim, synaptic_gate_multiplies_the_weight )
{
  gating_network net;
  net.add_input( "a" );
  net.add_input( "g" );
  net.add_neuron( "y", activation::identity, 1 );
  auto const e = net.add_edge( "a", "y", 3 );
  net.add_synaptic_gate( "g", e );
  net.add_output( "y" );
  std::vector<double> in{ 2, 0.5 };
  EXPECT_DOUBLE_EQ( evaluate( net, in ).outputs.front(), 1 + 3 * 2 * 0.5 );
  std::vector<rational> exact{ 2, rational( 1, 2 ) };
  EXPECT_EQ( compiled_network( net ).evaluate_exact( exact ).outputs.front(), 4 );
}

TEST( netsim, additive_attention_silences_a_unit )
{
  gating_network net;
  net.add_input( "x" );
  net.add_input( "att" );
  net.add_neuron( "h", activation::sign, rational( 1, 2 ) );
  net.add_edge( "x", "h" );
  net.add_edge( "att", "h", -1000000, std::string( additive_attention_tag ) );
  net.add_output( "h" );
  compiled_network c( net );
  for ( double x : { 0.0, 1.0 } )
  {
    std::vector<double> on{ x, 0 }, off{ x, 1 };
    EXPECT_EQ( c.outputs( on ).front(), 1 );
    EXPECT_EQ( c.outputs( off ).front(), -1 );
  }
}

TEST( netsim, activation_conventions )
{
  EXPECT_EQ( apply_activation( activation::heaviside, 0 ), 0 );
  EXPECT_EQ( apply_activation( activation::step, 0 ), 1 );
  EXPECT_EQ( apply_activation( activation::sign, 0 ), 1 );
  EXPECT_EQ( apply_activation( activation::relu, -3 ), 0 );
  EXPECT_THROW( apply_activation( activation::log, 0 ), domain_error );
  EXPECT_THROW( parse_activation( "softplus" ), usage_error );

  gating_network net;
  net.add_input( "x" );
  net.add_neuron( "s", activation::sign );
  net.add_edge( "x", "s" );
  net.add_output( "s" );
  std::vector<double> zero{ 0 };
  auto const r = evaluate( net, zero );
  EXPECT_EQ( r.outputs.front(), 1 );
  EXPECT_EQ( r.trace.warnings.size(), 1u );

  net.neurons.back().act = activation::exp;
  std::vector<rational> z{ 0 };
  EXPECT_THROW( compiled_network( net ).evaluate_exact( z ), domain_error );
}

TEST( netsim, structural_errors )
{
  auto net = gated_copy();
  net.add_output_gate( "a", "c" );
  EXPECT_THROW( net.validate(), usage_error );
  net.allow_multiplicity = true;
  EXPECT_NO_THROW( net.validate() );
  std::vector<double> in{ 5, 6 };
  EXPECT_DOUBLE_EQ( evaluate( net, in ).outputs.front(), 150.0 );

  gating_network cyc;
  cyc.add_input( "x" );
  cyc.add_neuron( "p" );
  cyc.add_neuron( "q" );
  cyc.add_edge( "x", "p" );
  cyc.add_edge( "p", "q" );
  cyc.add_output_gate( "q", "p" );
  EXPECT_THROW( cyc.validate(), usage_error );

  EXPECT_THROW( net.add_neuron( "a" ), usage_error );
  std::vector<double> short_in{ 1 };
  EXPECT_THROW( evaluate( gated_copy(), short_in ), usage_error );
}

TEST( netsim, shape_activation )
{
  std::vector<double> xs{ -1, -0.5, 0, 0.5, 1 };
  auto const relu2 = shape_activation( activation::relu, activation::relu, xs );
  auto const wedge = shape_activation( activation::identity, activation::sign, xs );
  for ( std::size_t i = 0; i < xs.size(); ++i )
  {
    EXPECT_DOUBLE_EQ( relu2[i], xs[i] > 0 ? xs[i] * xs[i] : 0 );
    EXPECT_DOUBLE_EQ( wedge[i], std::abs( xs[i] ) );
  }
}

TEST( netsim, sm_builders )
{
  std::vector<double> uv{ 1, 2, 3, 4, 5, 6 };
  EXPECT_NEAR( evaluate( build_sm_dot_product( 3 ), uv ).outputs.front(), 32, 1e-9 );
  for ( auto mode : { gating_mode::output, gating_mode::synaptic } )
  {
    auto const r = evaluate( build_gated_dot_product( 3, mode ), uv );
    EXPECT_DOUBLE_EQ( r.outputs.front(), 32 );
    EXPECT_EQ( r.trace.output_gating_ops + r.trace.synaptic_gating_ops, 3u );
  }

  std::vector<double> zeros{ 0, 0, 0 };
  for ( auto v : evaluate( build_sm_softmax( 3 ), zeros ).outputs )
  {
    EXPECT_NEAR( v, 1.0 / 3, 1e-12 );
  }
  std::vector<double> v34{ 3, 4 };
  auto const nrm = evaluate( build_sm_normalization( 2 ), v34 ).outputs;
  EXPECT_NEAR( nrm[0], 0.6, 1e-12 );
  EXPECT_NEAR( nrm[1], 0.8, 1e-12 );
  std::vector<double> bad{ -1, 4 };
  EXPECT_THROW( evaluate( build_sm_normalization( 2 ), bad ), domain_error );
}

TEST( netsim, gating_transforms_preserve_the_map )
{
  std::mt19937_64 rng( 3 );
  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    auto const net = random_network( seed, 3, 3, 4, 2 );
    auto const syn = output_to_synaptic( net );
    auto const out = synaptic_to_output( net );
    auto const back = synaptic_to_output( syn );
    EXPECT_TRUE( syn.output_gates.empty() );
    EXPECT_TRUE( out.synaptic_gates.empty() );
    EXPECT_TRUE( back.synaptic_gates.empty() );
    compiled_network c0( net ), c1( syn ), c2( out ), c3( back );
    for ( int k = 0; k < 5; ++k )
    {
      auto const x = random_inputs( rng, 3 );
      auto const y = c0.outputs( x );
      for ( auto const* c : { &c1, &c2, &c3 } )
      {
        auto const z = c->outputs( x );
        ASSERT_EQ( z.size(), y.size() );
        for ( std::size_t i = 0; i < y.size(); ++i )
        {
          EXPECT_NEAR( z[i], y[i], 1e-9 * ( 1 + std::abs( y[i] ) ) ) << "seed " << seed;
        }
      }
    }
  }
}

TEST( netsim, gated_output_keeps_its_value_after_transform )
{
  auto const net = output_to_synaptic( gated_copy() );
  std::vector<double> in{ 5, 6 };
  EXPECT_DOUBLE_EQ( evaluate( net, in ).outputs.front(), 30.0 );
}

TEST( netsim, io_round_trip )
{
  auto net = random_network( 9, 2, 2, 3, 1 );
  net.neurons.back().bias = rational( 1, 3 );
  auto const j = to_json( net );
  auto const again = from_json( nlohmann::json::parse( j.dump() ) );
  EXPECT_EQ( to_json( again ).dump(), j.dump() );

  auto const path = ( std::filesystem::temp_directory_path() / "quarkcap_io_test.json" ).string();
  save_network( net, path );
  EXPECT_EQ( to_json( load_network( path ) ).dump(), j.dump() );
  std::remove( path.c_str() );

  EXPECT_THROW( from_json( nlohmann::json::parse( "[1, 2]" ) ), usage_error );
  EXPECT_THROW( load_network( "/nonexistent/net.json" ), usage_error );
}
