// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/boolfn/boolean_op.hpp>
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/approximator.hpp>
#include <quarkcap/constructs/corner.hpp>
#include <quarkcap/constructs/decomposition.hpp>
#include <quarkcap/constructs/embedding.hpp>
#include <quarkcap/constructs/multiplex.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/netsim/evaluate.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace quarkcap;
using boolfn::assignment;
using boolfn::encoding;
using boolfn::truth_table;
using threshold::poly_weights;

namespace
{

/* sign of a certificate at a 0/1 point, computed directly from the terms */
int sign_at( poly_weights const& w, assignment x )
{
  rational s = 0;
  for ( auto const& [m, c] : w.terms() )
  {
    if ( ( x & m ) == m )
    {
      s += c;
    }
  }
  EXPECT_NE( sgn( s ), 0 );
  return sgn( s ) > 0 ? 1 : -1;
}

std::vector<poly_weights> certificates( unsigned n )
{
  std::vector<poly_weights> out;
  for ( auto const& t : threshold::threshold_class( n, 1 ) )
  {
    out.push_back( *threshold::realize( t, 1 ) );
  }
  return out;
}

std::vector<rational> bits_of( assignment x, unsigned n )
{
  std::vector<rational> in;
  for ( unsigned b = 0; b < n; ++b )
  {
    in.emplace_back( static_cast<int>( ( x >> b ) & 1u ) );
  }
  return in;
}

} // namespace

TEST( corner, separators_hold_on_both_cubes )
{
  for ( unsigned n = 1; n <= 5; ++n )
  {
    for ( assignment c = 0; c < ( assignment{ 1 } << n ); ++c )
    {
      for ( auto cube : { encoding::zero_one, encoding::plus_minus } )
      {
        auto const s = constructs::make_corner_separator( n, c, 2, 3, cube );
        EXPECT_TRUE( s.holds() );
        EXPECT_EQ( s.value( c ), 3 );
        for ( assignment x = 0; x < ( assignment{ 1 } << n ); ++x )
        {
          if ( x != c )
          {
            EXPECT_LE( s.value( x ), -2 );
          }
        }
      }
    }
  }
  EXPECT_THROW( constructs::make_corner_separator( 2, 0, 0, 1 ), domain_error );
  EXPECT_THROW( constructs::make_corner_separator( 2, 4, 1, 1 ), arity_error );
}

TEST( decomposition, every_small_function )
{
  for ( unsigned n = 1; n <= 3; ++n )
  {
    for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
    {
      for ( auto enc : { encoding::zero_one, encoding::plus_minus } )
      {
        auto const t = truth_table::from_word( n, w, enc );
        auto const d = constructs::product_decomposition( t );
        EXPECT_EQ( d.factors.size(), ( std::uint64_t{ 1 } << n ) - t.count_ones() );
        EXPECT_EQ( constructs::multiply_factors( d.factors, n, enc ), t );
        for ( std::size_t i = 0; i < d.factors.size(); ++i )
        {
          for ( assignment x = 0; x < t.size(); ++x )
          {
            EXPECT_EQ( sign_at( d.factors[i], x ) < 0, x == d.off_set[i] );
          }
        }
        netsim::compiled_network net( constructs::product_network( d ) );
        for ( assignment x = 0; x < t.size(); ++x )
        {
          auto const out = net.evaluate_exact( bits_of( x, n ) ).outputs.front();
          EXPECT_EQ( out, t.value( x ) );
        }
      }
    }
  }
}

TEST( decomposition, xor_uses_two_factors )
{
  auto const x = truth_table::from_bits( { 0, 1, 1, 0 } );
  auto const d = constructs::product_decomposition( x );
  EXPECT_EQ( d.factors.size(), 2u );
  EXPECT_EQ( d.claimed_bound, 1u );
  EXPECT_TRUE( d.exceeds_claimed_bound );
  std::set<std::string> names;
  for ( auto const& f : d.factors )
  {
    names.insert( threshold::tabulate( f, threshold::threshold_kind::sign ).to_values_string() );
  }
  /* OR and NAND */
  EXPECT_EQ( names, ( std::set<std::string>{ "(-1,1,1,1)", "(1,1,1,-1)" } ) );
}

TEST( embedding, restriction_examples )
{
  boolfn::boolean_op const and_op( 2, 0b1000 ), nand_op( 2, 0b0111 ), xor_op( 2, 0b0110 );
  auto const r_and = constructs::restriction_signs( and_op, 0 );
  EXPECT_EQ( r_and.theta, 1 );
  EXPECT_EQ( r_and.others, ( std::vector<int>{ 0, 1 } ) );
  EXPECT_EQ( constructs::restriction_signs( nand_op, 1 ).theta, -1 );
  auto const r_xor = constructs::restriction_signs( xor_op, 1 );
  EXPECT_EQ( r_xor.others, ( std::vector<int>{ -1, 0 } ) );
  EXPECT_EQ( r_xor.theta, 1 );
  EXPECT_THROW( constructs::restriction_signs( boolfn::boolean_op( 2, 0b1010 ), 1 ), error );
}

TEST( embedding, fit_affine_interpolates )
{
  for ( unsigned k = 1; k <= 3; ++k )
  {
    for ( unsigned j = 0; j <= k; ++j )
    {
      std::vector<int> theta( k + 1 );
      for ( unsigned i = 0; i <= k; ++i )
      {
        theta[i] = i % 2 ? -1 : 1;
      }
      auto const q = constructs::fit_affine( k, j, theta );
      for ( unsigned i = 0; i <= k; ++i )
      {
        EXPECT_EQ( q.value( constructs::unit_code( i ) ), i == j ? 0 : theta[i] );
      }
    }
  }
}

TEST( embedding, composition_recovers_each_argument )
{
  std::mt19937_64 rng( 11 );
  auto const c1 = certificates( 1 );
  auto const c2 = certificates( 2 );
  for ( auto const& op : gating::irreducible_binary_ops() )
  {
    for ( auto const* pool : { &c1, &c2 } )
    {
      for ( int trial = 0; trial < 10; ++trial )
      {
        std::vector<poly_weights> fs{ ( *pool )[rng() % pool->size()], ( *pool )[rng() % pool->size()] };
        auto const e = constructs::composition_embedding( op, fs );
        auto const nx = fs[0].arity();
        auto const composed = e.composed();
        ASSERT_EQ( composed.arity(), nx + 1 );
        for ( unsigned i = 0; i < 2; ++i )
        {
          for ( assignment x = 0; x < ( assignment{ 1 } << nx ); ++x )
          {
            EXPECT_EQ( composed.value( constructs::unit_code( i ) | ( x << 1 ) ), sign_at( fs[i], x ) ) << op.name();
          }
        }
      }
    }
  }
}

TEST( multiplex, selects_each_gate )
{
  std::mt19937_64 rng( 5 );
  auto const pool = certificates( 2 );
  for ( unsigned m = 1; m <= 4; ++m )
  {
    for ( auto addr : { constructs::addressing::dense, constructs::addressing::sparse } )
    {
      for ( auto [mask, ro] : { std::pair{ false, constructs::readout::or_op }, std::pair{ true, constructs::readout::and_op },
                                std::pair{ true, constructs::readout::product } } )
      {
        std::vector<poly_weights> fs;
        for ( unsigned i = 0; i < m; ++i )
        {
          fs.push_back( pool[rng() % pool.size()] );
        }
        auto const mx = constructs::build_multiplex( fs, addr, std::vector<bool>( m, mask ), ro );
        EXPECT_EQ( mx.attention_bits, constructs::attention_width( m, addr ) );
        netsim::compiled_network net( mx.to_network() );
        for ( unsigned i = 0; i < m; ++i )
        {
          for ( assignment xp = 0; xp < 4; ++xp )
          {
            auto const x = mx.extended( i, xp );
            auto const h = mx.hidden_outputs( x );
            for ( unsigned j = 0; j < m; ++j )
            {
              EXPECT_EQ( h[j], j == i ? sign_at( fs[j], xp ) : ( mask ? 1 : -1 ) );
            }
            EXPECT_EQ( mx.output( x ), sign_at( fs[i], xp ) );
            EXPECT_EQ( net.evaluate_exact( bits_of( x, mx.arity() ) ).outputs.front(), sign_at( fs[i], xp ) );
          }
        }
      }
    }
  }
  EXPECT_EQ( constructs::attention_width( 4, constructs::addressing::dense ), 2u );
  EXPECT_EQ( constructs::attention_width( 4, constructs::addressing::sparse ), 3u );
}

TEST( approximator, error_bounds )
{
  auto const id = []( double x ) { return x; };
  auto const sq = []( double x ) { return x * x; };
  auto const lin_id = constructs::build_slice_approximator( constructs::sample_function( id, 10 ), constructs::slice_variant::linear );
  EXPECT_EQ( constructs::sup_error( lin_id, id, 1001 ), 0.0 );
  auto const lin = constructs::build_slice_approximator( constructs::sample_function( sq, 10 ), constructs::slice_variant::linear );
  auto const cst = constructs::build_slice_approximator( constructs::sample_function( sq, 10 ), constructs::slice_variant::constant );
  EXPECT_LE( constructs::sup_error( lin, sq, 1001 ), 0.0025 + 1e-9 );
  EXPECT_LE( constructs::sup_error( cst, sq, 1001 ), 0.19 + 1e-9 );
  EXPECT_NEAR( lin.evaluate( 0.55 ), ( 0.25 + 0.36 ) / 2, 1e-12 );
  EXPECT_THROW( lin.evaluate( 1.5 ), domain_error );

  netsim::compiled_network net( lin.to_network() );
  for ( int i = 0; i <= 100; ++i )
  {
    double const x = i / 100.0;
    std::vector<double> in{ x };
    EXPECT_NEAR( net.outputs( in ).front(), lin.evaluate( x ), 1e-12 );
    EXPECT_NEAR( lin.evaluate( x ), x * x, 0.0025 + 1e-9 );
  }
}
