// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/parallel.hpp>
#include <quarkcap/constructs/embedding.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <algorithm>

namespace quarkcap::gating
{

namespace
{

using words = std::vector<std::uint64_t>;

void sort_unique( words& w )
{
  std::sort( w.begin(), w.end() );
  w.erase( std::unique( w.begin(), w.end() ), w.end() );
}

void check_small( unsigned n )
{
  if ( n == 0 || n > 4 )
  {
    throw arity_error( "gated classes are enumerated for 1 <= n <= 4" );
  }
}

} // namespace

std::vector<boolfn::boolean_op> irreducible_binary_ops()
{
  std::vector<boolfn::boolean_op> out;
  for ( auto const& op : boolfn::boolean_op::all_binary() )
  {
    if ( boolfn::is_irreducible( op ) )
    {
      out.push_back( op );
    }
  }
  return out;
}

boolfn::function_class compose_class( composition_spec const& spec, unsigned jobs )
{
  check_small( spec.n );
  auto const k = spec.op.arity();
  if ( spec.degrees.size() != k )
  {
    throw arity_error( "operator arity " + std::to_string( k ) + " differs from the number of degrees" );
  }
  std::vector<words> bases;
  double tuples = 1;
  for ( auto const d : spec.degrees )
  {
    bases.push_back( threshold::threshold_class( spec.n, d ).words() );
    tuples *= static_cast<double>( bases.back().size() );
  }
  if ( tuples > 5e8 )
  {
    throw arity_error( "composition sweep exceeds 5e8 tuples" );
  }
  auto const outer = bases.front().size();
  auto found = chunked_reduce<words>(
      outer, resolve_jobs( jobs ),
      [&]( std::size_t begin, std::size_t end ) {
        words local;
        std::vector<std::uint64_t> args( k );
        std::vector<std::size_t> idx( k, 0 );
        for ( auto first = begin; first < end; ++first )
        {
          std::fill( idx.begin(), idx.end(), 0 );
          idx[0] = first;
          /* odometer over the remaining arguments */
          for ( ;; )
          {
            for ( unsigned j = 0; j < k; ++j )
            {
              args[j] = bases[j][idx[j]];
            }
            local.push_back( boolfn::combine_words( spec.op, args, spec.n ) );
            unsigned j = 1;
            while ( j < k && ++idx[j] == bases[j].size() )
            {
              idx[j++] = 0;
            }
            if ( j >= k )
            {
              break;
            }
          }
          if ( local.size() > ( 1u << 20 ) )
          {
            sort_unique( local );
          }
        }
        sort_unique( local );
        return local;
      },
      []( words& acc, words&& part ) {
        acc.insert( acc.end(), part.begin(), part.end() );
        sort_unique( acc );
      } );
  return boolfn::function_class::from_words( spec.n, found, spec.enc );
}

bounds_report verify_composition_bounds( composition_spec const& spec, unsigned jobs )
{
  auto const k = spec.op.arity();
  if ( !boolfn::is_irreducible( spec.op ) )
  {
    throw domain_error( "composition bounds need an irreducible operator" );
  }
  if ( spec.n < k )
  {
    throw domain_error( "composition bounds need n >= k" );
  }
  bounds_report r;
  r.lower = 1;
  r.upper = 1;
  for ( auto const d : spec.degrees )
  {
    r.lower *= threshold::threshold_class( spec.n - k + 1, d ).size();
    r.upper *= threshold::threshold_class( spec.n, d ).size();
  }
  r.exact = compose_class( spec, jobs ).size();
  r.verdict = r.lower <= r.exact && r.exact <= r.upper;
  return r;
}

table2_result table2_report( unsigned n, unsigned jobs )
{
  if ( n == 0 || n > 3 )
  {
    throw arity_error( "table2 is computed for 1 <= n <= 3" );
  }
  table2_result res;
  res.n = n;
  auto const& single = threshold::threshold_class( n, 1 );
  std::vector<boolfn::function_class> classes;
  for ( auto const& op : boolfn::boolean_op::all_binary() )
  {
    table2_row row;
    row.op = op;
    row.irreducible = boolfn::is_irreducible( op );
    row.symmetric = op.is_symmetric();
    row.ltg_implementable = threshold::realize( boolfn::truth_table::from_word( 2, op.table() ), 1 ).has_value();
    auto cls = compose_class( { op, { 1, 1 }, n, boolfn::encoding::plus_minus }, jobs );
    row.count = cls.size();
    row.capacity = boolfn::capacity( cls );
    row.equals_single_class = cls == single;
    res.irreducible_count += row.irreducible;
    res.symmetric_count += row.symmetric;
    res.ltg_count += row.ltg_implementable;
    res.rows.push_back( row );
    classes.push_back( std::move( cls ) );
  }
  for ( std::uint64_t t = 0; t < 16; ++t )
  {
    auto const neg = ~t & 0xfu;
    if ( t < neg )
    {
      auto u = classes[t];
      auto other = classes[neg];
      u.merge( std::move( other ) );
      res.pair_counts.emplace_back( res.rows[t].op, u.size() );
    }
  }
  auto const and_t = boolfn::boolean_op::parse( "AND" ).table();
  auto const or_t = boolfn::boolean_op::parse( "OR" ).table();
  auto const xor_t = boolfn::boolean_op::parse( "XOR" ).table();
  auto const nxor_t = boolfn::boolean_op::parse( "NXOR" ).table();
  res.and_equals_or = classes[and_t].size() == classes[or_t].size();
  res.xor_equals_nxor = classes[xor_t] == classes[nxor_t];
  res.single_class_in_and_or = single.is_subset_of( classes[and_t] ) && single.is_subset_of( classes[or_t] );
  return res;
}

closure_result product_closure( unsigned n, unsigned d, unsigned max_factors )
{
  if ( n == 0 || n > 3 )
  {
    throw arity_error( "product closure is computed for 1 <= n <= 3" );
  }
  if ( max_factors == 0 )
  {
    throw usage_error( "need at least one factor" );
  }
  closure_result res;
  res.n = n;
  res.d = d;
  res.claimed_bound = n < 2 ? 1u : std::uint64_t{ 1 } << ( n - 2 );
  auto const base = threshold::threshold_class( n, d ).words();
  auto const all = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );
  auto const mask = boolfn::word_mask( n );
  words current = base;
  for ( unsigned m = 1; m <= max_factors; ++m )
  {
    if ( m > 1 )
    {
      words next = current;
      for ( auto const a : current )
      {
        for ( auto const b : base )
        {
          /* -/+ product is NXOR of the bits */
          next.push_back( ~( a ^ b ) & mask );
        }
      }
      sort_unique( next );
      if ( next == current )
      {
        break;
      }
      current = std::move( next );
    }
    res.classes.push_back( boolfn::function_class::from_words( n, current ) );
    if ( current.size() == all && !res.saturated_at )
    {
      res.saturated_at = m;
      break;
    }
  }
  return res;
}

intersection_result intersection_witnesses( unsigned n, unsigned d0, unsigned d1 )
{
  if ( n < 2 || n > 3 )
  {
    throw arity_error( "intersection witnesses are built for n in {2, 3}" );
  }
  intersection_result res;
  res.n = n;
  auto const& base0 = threshold::threshold_class( n - 1, d0 );
  auto const& base1 = threshold::threshold_class( n - 1, d1 );
  res.expected = base0.size() * base1.size();

  auto certify = []( boolfn::function_class const& c, unsigned d ) {
    std::vector<std::pair<boolfn::truth_table, threshold::poly_weights>> out;
    for ( auto const& t : c )
    {
      auto w = threshold::realize( t, d );
      if ( !w )
      {
        throw internal_error( "class member without a certificate" );
      }
      out.emplace_back( t, std::move( *w ) );
    }
    return out;
  };
  auto const cert0 = certify( base0, d0 );
  auto const cert1 = certify( base1, d1 );

  auto const ops = irreducible_binary_ops();
  std::vector<boolfn::function_class> classes;
  for ( auto const& op : ops )
  {
    classes.push_back( compose_class( { op, { d0, d1 }, n, boolfn::encoding::plus_minus } ) );
  }
  auto const& full0 = threshold::threshold_class( n, d0 );
  auto const& full1 = threshold::threshold_class( n, d1 );

  res.all_members = true;
  res.embedding_agrees = true;
  for ( auto const& [f0, p0] : cert0 )
  {
    for ( auto const& [f1, p1] : cert1 )
    {
      auto const w = boolfn::tabulate( n, [&]( boolfn::assignment x ) {
        return ( x & 1u ) ? f1.get( x >> 1 ) : f0.get( x >> 1 );
      } );
      for ( std::size_t b = 0; b < ops.size(); ++b )
      {
        auto const et = constructs::composition_embedding( ops[b], { p0, p1 } );
        auto const F0 = threshold::tabulate( et.F[0], threshold::threshold_kind::sign );
        auto const F1 = threshold::tabulate( et.F[1], threshold::threshold_kind::sign );
        if ( et.composed() != w || !full0.contains( F0 ) || !full1.contains( F1 ) )
        {
          res.embedding_agrees = false;
        }
        if ( !classes[b].contains( w ) )
        {
          res.all_members = false;
        }
      }
      res.witnesses.push_back( w );
    }
  }
  auto sorted = res.witnesses;
  std::sort( sorted.begin(), sorted.end() );
  res.distinct = std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end() && sorted.size() == res.expected;
  return res;
}

} // namespace quarkcap::gating
