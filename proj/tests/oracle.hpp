// SPDX-License-Identifier: Apache-2.0
// Independent brute-force oracles shared by the test binaries. They use plain
// integer arithmetic and never call into the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle
{

/* all sign(2 * sum w_i x_i + b) over 0/1 x, integer w in [-W, W] and odd b */
inline std::set<std::uint64_t> ltf_words( unsigned n, int W )
{
  std::set<std::uint64_t> out;
  std::vector<int> w( n, -W );
  int const bmax = 2 * W * static_cast<int>( n ) + 1;
  for ( ;; )
  {
    for ( int b = -bmax; b <= bmax; b += 2 )
    {
      std::uint64_t word = 0;
      for ( unsigned x = 0; x < ( 1u << n ); ++x )
      {
        int s = b;
        for ( unsigned i = 0; i < n; ++i )
        {
          s += ( ( x >> i ) & 1u ) ? 2 * w[i] : 0;
        }
        if ( s > 0 )
        {
          word |= std::uint64_t{ 1 } << x;
        }
      }
      out.insert( word );
    }
    unsigned i = 0;
    while ( i < n && ++w[i] > W )
    {
      w[i++] = -W;
    }
    if ( i == n )
    {
      break;
    }
  }
  return out;
}

/* all sign(2 p(x) + b) with p a multilinear polynomial of degree <= 2 over n <= 3 inputs */
inline std::set<std::uint64_t> quadratic_words( unsigned n, int W )
{
  std::vector<std::uint32_t> monos;
  for ( std::uint32_t m = 1; m < ( 1u << n ); ++m )
  {
    if ( __builtin_popcount( m ) <= 2 )
    {
      monos.push_back( m );
    }
  }
  std::set<std::uint64_t> out;
  std::vector<int> c( monos.size(), -W );
  int const bmax = 2 * W * static_cast<int>( monos.size() ) + 1;
  for ( ;; )
  {
    for ( int b = -bmax; b <= bmax; b += 2 )
    {
      std::uint64_t word = 0;
      for ( unsigned x = 0; x < ( 1u << n ); ++x )
      {
        int s = b;
        for ( std::size_t k = 0; k < monos.size(); ++k )
        {
          s += ( ( x & monos[k] ) == monos[k] ) ? 2 * c[k] : 0;
        }
        if ( s > 0 )
        {
          word |= std::uint64_t{ 1 } << x;
        }
      }
      out.insert( word );
    }
    std::size_t i = 0;
    while ( i < c.size() && ++c[i] > W )
    {
      c[i++] = -W;
    }
    if ( i == c.size() )
    {
      break;
    }
  }
  return out;
}

/* pointwise binary operator given by its 4-entry table (entry p + 2q) */
inline std::uint64_t apply_op( unsigned table, std::uint64_t f, std::uint64_t g, unsigned n )
{
  std::uint64_t out = 0;
  for ( unsigned x = 0; x < ( 1u << n ); ++x )
  {
    unsigned const e = static_cast<unsigned>( ( f >> x ) & 1u ) + 2u * static_cast<unsigned>( ( g >> x ) & 1u );
    out |= std::uint64_t{ ( table >> e ) & 1u } << x;
  }
  return out;
}

inline std::set<std::uint64_t> compose( unsigned table, std::set<std::uint64_t> const& a, std::set<std::uint64_t> const& b, unsigned n )
{
  std::set<std::uint64_t> out;
  for ( auto f : a )
  {
    for ( auto g : b )
    {
      out.insert( apply_op( table, f, g, n ) );
    }
  }
  return out;
}

/* softmax(Q K^T) V, scores without scaling, rows indexed by the query */
inline std::vector<std::vector<double>> attention( std::vector<std::vector<double>> const& wq, std::vector<std::vector<double>> const& wk,
                                                   std::vector<std::vector<double>> const& wv, std::vector<std::vector<double>> const& x )
{
  auto proj = [&]( std::vector<std::vector<double>> const& w, std::vector<double> const& v ) {
    std::vector<double> r( w.size(), 0.0 );
    for ( std::size_t a = 0; a < w.size(); ++a )
    {
      for ( std::size_t j = 0; j < v.size(); ++j )
      {
        r[a] += w[a][j] * v[j];
      }
    }
    return r;
  };
  std::size_t const n = x.size();
  std::vector<std::vector<double>> out;
  for ( std::size_t l = 0; l < n; ++l )
  {
    auto const q = proj( wq, x[l] );
    std::vector<double> e( n );
    double z = 0;
    for ( std::size_t k = 0; k < n; ++k )
    {
      auto const kk = proj( wk, x[k] );
      double s = 0;
      for ( std::size_t a = 0; a < q.size(); ++a )
      {
        s += q[a] * kk[a];
      }
      e[k] = std::exp( s );
      z += e[k];
    }
    std::vector<double> o( wv.size(), 0.0 );
    for ( std::size_t k = 0; k < n; ++k )
    {
      auto const v = proj( wv, x[k] );
      for ( std::size_t a = 0; a < v.size(); ++a )
      {
        o[a] += e[k] / z * v[a];
      }
    }
    out.push_back( o );
  }
  return out;
}

} // namespace oracle
