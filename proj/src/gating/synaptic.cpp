// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/gating/synaptic.hpp>

#include <set>

namespace quarkcap::gating
{

namespace
{

/* sign with sign(0) = 0, as the mixed case needs */
int sign0( rational const& v )
{
  return sgn( v );
}

int gate_value( threshold::threshold_kind kind, bool bit )
{
  if ( kind == threshold::threshold_kind::sign )
  {
    return bit ? 1 : -1;
  }
  return bit ? 1 : 0;
}

} // namespace

full_synaptic_report full_synaptic_gating_check( unsigned n, unsigned d, threshold::threshold_kind f_kind, threshold::threshold_kind g_kind,
                                                 std::size_t max_counterexamples )
{
  using threshold::threshold_kind;
  full_synaptic_report rep;
  rep.n = n;
  rep.d = d;
  rep.f_kind = f_kind;
  rep.g_kind = g_kind;
  auto const& cls = threshold::threshold_class( n, d );

  std::vector<std::pair<boolfn::truth_table, std::vector<rational>>> gated;
  for ( auto const& f : cls )
  {
    auto const w = threshold::realize( f, d );
    if ( !w )
    {
      throw internal_error( "class member without a certificate" );
    }
    std::vector<rational> values;
    for ( boolfn::assignment x = 0; x < f.size(); ++x )
    {
      values.push_back( w->value( x ) );
    }
    gated.emplace_back( f, std::move( values ) );
  }

  for ( auto const& [f, p] : gated )
  {
    for ( auto const& g : cls )
    {
      ++rep.pairs;
      for ( boolfn::assignment x = 0; x < f.size(); ++x )
      {
        int const gv = gate_value( g_kind, g.get( x ) );
        int const fv = gate_value( f_kind, f.get( x ) );
        rational const s = p[x] * gv;
        int actual = 0, expected = 0;
        if ( f_kind == threshold_kind::sign )
        {
          actual = sign0( s );
          expected = fv * gv;
        }
        else
        {
          actual = sgn( s ) > 0 ? 1 : 0;
          expected = gv >= 0 ? fv * gv : 1 - fv;
        }
        rep.gated_off_points += gv <= 0;
        ++rep.points_checked;
        if ( actual != expected && rep.counterexamples.size() < max_counterexamples )
        {
          rep.counterexamples.push_back( { f, g, x, expected, actual } );
        }
      }
    }
  }
  return rep;
}

single_weight_report single_weight_gating_class( unsigned n, unsigned gated_index )
{
  if ( n == 0 || n > 3 )
  {
    throw arity_error( "single-weight gating sweep supports 1 <= n <= 3" );
  }
  if ( gated_index >= n )
  {
    throw usage_error( "gated weight index must be below n" );
  }
  single_weight_report rep;
  rep.n = n;
  rep.gated_index = gated_index;
  auto const& single = threshold::threshold_class( n, 1 );
  rep.single_count = single.size();
  auto const points = boolfn::assignment{ 1 } << n;

  /* weight vectors (w_0, w_1, ..., w_n) as integers; certificates are integral already */
  std::set<std::vector<long>> weights;
  for ( auto const& f : single )
  {
    auto const w = threshold::realize( f, 1 );
    std::vector<long> v( n + 1 );
    v[0] = w->bias().get_num().get_si();
    for ( unsigned i = 0; i < n; ++i )
    {
      v[i + 1] = w->coeff( threshold::monomial{ 1 } << i ).get_num().get_si();
    }
    weights.insert( v );
  }
  std::vector<long> v( n + 1, -3 );
  for ( ;; )
  {
    bool nonzero = true;
    for ( boolfn::assignment x = 0; x < points && nonzero; ++x )
    {
      long s = v[0];
      for ( unsigned i = 0; i < n; ++i )
      {
        s += boolfn::input_bit( x, i ) ? v[i + 1] : 0;
      }
      nonzero = s != 0;
    }
    if ( nonzero )
    {
      weights.insert( v );
    }
    unsigned i = 0;
    while ( i <= n && v[i] == 3 )
    {
      v[i++] = -3;
    }
    if ( i > n )
    {
      break;
    }
    ++v[i];
  }
  rep.weight_vectors = weights.size();

  std::set<std::uint64_t> tables;
  for ( auto const& w : weights )
  {
    for ( auto const& g : single )
    {
      std::uint64_t word = 0;
      bool ambiguous = false;
      for ( boolfn::assignment x = 0; x < points; ++x )
      {
        long s = w[0];
        for ( unsigned i = 0; i < n; ++i )
        {
          if ( boolfn::input_bit( x, i ) )
          {
            s += ( i == gated_index ? ( g.get( x ) ? 1 : -1 ) : 1 ) * w[i + 1];
          }
        }
        if ( s == 0 )
        {
          ambiguous = true;
          break;
        }
        word |= std::uint64_t{ s > 0 } << x;
      }
      if ( ambiguous )
      {
        ++rep.skipped_ambiguous;
        continue;
      }
      tables.insert( word );
    }
  }
  std::vector<std::uint64_t> words( tables.begin(), tables.end() );
  rep.cls = boolfn::function_class::from_words( n, words );
  rep.contains_single_class = single.is_subset_of( rep.cls );
  rep.within_upper = rep.cls.size() <= rep.single_count * rep.single_count;
  return rep;
}

} // namespace quarkcap::gating
