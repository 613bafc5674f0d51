// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/boolfn/boolean_op.hpp>
#include <quarkcap/boolfn/function_class.hpp>
#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/error.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace quarkcap::boolfn;

TEST( truth_table, tabulate_or_nand_identity )
{
  auto const t_or = tabulate( 2, []( assignment x ) { return input_bit( x, 0 ) || input_bit( x, 1 ); }, encoding::zero_one );
  EXPECT_EQ( t_or.to_values_string(), "(0,1,1,1)" );
  auto const t_nand = tabulate( 2, []( assignment x ) { return !( input_bit( x, 0 ) && input_bit( x, 1 ) ); }, encoding::zero_one );
  EXPECT_EQ( t_nand.to_values_string(), "(1,1,1,0)" );
  auto const t_id = tabulate( 1, []( assignment x ) { return input_bit( x, 0 ); }, encoding::zero_one );
  EXPECT_EQ( t_id.to_values_string(), "(0,1)" );
}

TEST( truth_table, canonical_text_round_trip )
{
  for ( unsigned n = 0; n <= 8; ++n )
  {
    truth_table t( n, n % 2 ? encoding::plus_minus : encoding::zero_one );
    for ( assignment x = 0; x < t.size(); ++x )
    {
      t.set( x, ( x * 2654435761u >> 7 ) & 1u );
    }
    EXPECT_EQ( truth_table::parse( t.to_string() ), t );
  }
  EXPECT_EQ( truth_table::from_bits( { 0, 1, 1, 0 }, encoding::zero_one ).to_string(), "n:2;enc:01;bits:6" );
  EXPECT_EQ( truth_table::from_bits( { 1, 1, 1, 0, 0, 0, 0, 1 }, encoding::plus_minus ).to_string(), "n:3;enc:pm;bits:78" );
}

TEST( truth_table, reencoding_is_an_involution )
{
  auto const t = truth_table::from_bits( { 0, 1, 1, 1 }, encoding::zero_one );
  auto const pm = t.reencoded( encoding::plus_minus );
  EXPECT_EQ( pm.to_values_string(), "(-1,1,1,1)" );
  EXPECT_EQ( pm.reencoded( encoding::zero_one ), t );
  EXPECT_EQ( ~~t, t );
}

TEST( truth_table, arity_limit )
{
  EXPECT_THROW( truth_table( max_arity + 1 ), quarkcap::arity_error );
}

TEST( boolean_op, product_of_or_and_nand_is_xor )
{
  auto const f = truth_table::from_values( std::vector<int>{ -1, 1, 1, 1 }, encoding::plus_minus );
  auto const g = truth_table::from_values( std::vector<int>{ 1, 1, 1, -1 }, encoding::plus_minus );
  std::vector<truth_table> args{ f, g };
  EXPECT_EQ( combine( boolean_op::parse( "PRODUCT" ), args ).to_values_string(), "(-1,1,1,-1)" );
}

TEST( boolean_op, identities )
{
  auto const f = truth_table::from_bits( { 1, 0, 0, 1, 1, 1, 0, 1 } );
  std::vector<truth_table> ff{ f, f };
  EXPECT_EQ( combine( boolean_op::parse( "AND" ), ff ), f );
  std::vector<truth_table> fz{ f, truth_table( 3 ) };
  EXPECT_EQ( combine( boolean_op::parse( "XOR" ), fz ), f );
  std::vector<truth_table> one{ f };
  auto const neg = combine( boolean_op::negation(), one );
  std::vector<truth_table> back{ neg };
  EXPECT_EQ( combine( boolean_op::negation(), back ), f );
}

TEST( boolean_op, mixed_encodings_rejected )
{
  std::vector<truth_table> args{ truth_table( 2, encoding::zero_one ), truth_table( 2, encoding::plus_minus ) };
  EXPECT_THROW( combine( boolean_op::parse( "AND" ), args ), quarkcap::error );
  std::vector<truth_table> arity{ truth_table( 2 ), truth_table( 3 ) };
  EXPECT_THROW( combine( boolean_op::parse( "AND" ), arity ), quarkcap::error );
}

TEST( boolean_op, ten_of_sixteen_irreducible )
{
  unsigned irreducible = 0;
  for ( auto const& op : boolean_op::all_binary() )
  {
    /* oracle: depends on both arguments */
    auto const t = op.table();
    bool const dep_p = ( ( t >> 0 ) & 1 ) != ( ( t >> 1 ) & 1 ) || ( ( t >> 2 ) & 1 ) != ( ( t >> 3 ) & 1 );
    bool const dep_q = ( ( t >> 0 ) & 1 ) != ( ( t >> 2 ) & 1 ) || ( ( t >> 1 ) & 1 ) != ( ( t >> 3 ) & 1 );
    EXPECT_EQ( is_irreducible( op ), dep_p && dep_q ) << op.name();
    irreducible += is_irreducible( op );
  }
  EXPECT_EQ( irreducible, 10u );
  EXPECT_TRUE( is_irreducible( boolean_op::parse( "AND" ) ) );
  EXPECT_FALSE( is_irreducible( boolean_op::parse( "P" ) ) );
  EXPECT_FALSE( is_irreducible( boolean_op::parse( "T" ) ) );
}

TEST( boolean_op, table_convention )
{
  EXPECT_EQ( boolean_op::parse( "AND" ).table(), 8u );
  EXPECT_EQ( boolean_op::parse( "OR" ).table(), 14u );
  EXPECT_EQ( boolean_op::parse( "XOR" ).table(), 6u );
  EXPECT_EQ( boolean_op::parse( "NXOR" ).table(), 9u );
  EXPECT_EQ( boolean_op::parse( "PRODUCT", encoding::zero_one ).table(), 8u );
  EXPECT_EQ( boolean_op::parse( "0x8" ), boolean_op::parse( "AND" ) );
}

TEST( function_class, insertion_is_idempotent )
{
  function_class c( 2, encoding::plus_minus );
  auto const t = truth_table::from_bits( { 0, 1, 1, 0 } );
  EXPECT_TRUE( c.insert( t ) );
  EXPECT_FALSE( c.insert( t ) );
  EXPECT_EQ( c.size(), 1u );
  EXPECT_DOUBLE_EQ( capacity( c ), 0.0 );
  EXPECT_THROW( c.insert( truth_table( 3 ) ), quarkcap::error );
}

TEST( function_class, merge_and_words )
{
  std::vector<std::uint64_t> a{ 1, 5, 9 }, b{ 5, 7 };
  auto ca = function_class::from_words( 2, a );
  ca.merge( function_class::from_words( 2, b ) );
  EXPECT_EQ( ca.words(), ( std::vector<std::uint64_t>{ 1, 5, 7, 9 } ) );
  EXPECT_NEAR( capacity( ca ), 2.0, 1e-12 );
  EXPECT_TRUE( function_class::from_words( 2, b ).is_subset_of( ca ) );
}

TEST( function_class, capacity_examples )
{
  std::vector<std::uint64_t> fourteen( 14 );
  for ( unsigned i = 0; i < 14; ++i )
  {
    fourteen[i] = i;
  }
  EXPECT_NEAR( capacity( function_class::from_words( 2, fourteen ) ), std::log2( 14.0 ), 1e-12 );
  EXPECT_THROW( capacity( function_class( 2, encoding::plus_minus ) ), quarkcap::error );
}
