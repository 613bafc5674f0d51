// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/transformer/encoder.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace quarkcap::transformer
{

namespace
{

std::string id( char const* base, unsigned i )
{
  return base + std::to_string( i + 1 );
}

std::string id( char const* base, unsigned i, unsigned j )
{
  return base + std::to_string( i + 1 ) + "_" + std::to_string( j + 1 );
}

std::string id( char const* base, unsigned i, unsigned j, unsigned k )
{
  return id( base, i, j ) + "_" + std::to_string( k + 1 );
}

void check_matrix( matrix const& w, unsigned rows, unsigned cols, char const* name )
{
  if ( w.size() != rows || std::any_of( w.begin(), w.end(), [&]( auto const& r ) { return r.size() != cols; } ) )
  {
    throw usage_error( std::string( name ) + " must be " + std::to_string( rows ) + " x " + std::to_string( cols ) );
  }
}

void check_bias( std::optional<std::vector<double>> const& b, unsigned m, char const* name )
{
  if ( b && b->size() != m )
  {
    throw usage_error( std::string( name ) + " must have " + std::to_string( m ) + " entries" );
  }
}

matrix random_matrix( counter_rng& rng, unsigned rows, unsigned cols )
{
  matrix w( rows, std::vector<double>( cols ) );
  for ( auto& r : w )
  {
    for ( auto& v : r )
    {
      v = static_cast<double>( rng.uniform_int( -1024, 1024 ) ) / 1024.0;
    }
  }
  return w;
}

std::vector<double> project( matrix const& w, std::optional<std::vector<double>> const& b, std::vector<double> const& x )
{
  std::vector<double> out( w.size(), 0.0 );
  for ( std::size_t a = 0; a < w.size(); ++a )
  {
    for ( std::size_t j = 0; j < x.size(); ++j )
    {
      out[a] += w[a][j] * x[j];
    }
    if ( b )
    {
      out[a] += ( *b )[a];
    }
  }
  return out;
}

} // namespace

void encoder_config::validate() const
{
  if ( n == 0 || d_in == 0 || m == 0 )
  {
    throw usage_error( "encoder dimensions must be positive" );
  }
  check_matrix( w_q, m, d_in, "W_Q" );
  check_matrix( w_k, m, d_in, "W_K" );
  check_matrix( w_v, m, d_in, "W_V" );
  check_bias( b_q, m, "b_Q" );
  check_bias( b_k, m, "b_K" );
  check_bias( b_v, m, "b_V" );
}

encoder_config random_config( std::uint64_t seed, unsigned n, unsigned d_in, unsigned m, bool with_bias )
{
  counter_rng rng( seed, "transformer.config" );
  encoder_config cfg;
  cfg.n = n;
  cfg.d_in = d_in;
  cfg.m = m;
  cfg.w_q = random_matrix( rng, m, d_in );
  cfg.w_k = random_matrix( rng, m, d_in );
  cfg.w_v = random_matrix( rng, m, d_in );
  if ( with_bias )
  {
    cfg.b_q = random_matrix( rng, 1, m ).front();
    cfg.b_k = random_matrix( rng, 1, m ).front();
    cfg.b_v = random_matrix( rng, 1, m ).front();
  }
  return cfg;
}

tokens random_tokens( std::uint64_t seed, unsigned n, unsigned d_in )
{
  counter_rng rng( seed, "transformer.tokens" );
  tokens x( n, std::vector<double>( d_in ) );
  for ( auto& t : x )
  {
    for ( auto& v : t )
    {
      v = rng.uniform( -1.0, 1.0 );
    }
  }
  return x;
}

netsim::gating_network build_encoder( encoder_config const& cfg )
{
  cfg.validate();
  using netsim::activation;
  netsim::gating_network net;
  auto const n = cfg.n, m = cfg.m, d = cfg.d_in;
  for ( unsigned k = 0; k < n; ++k )
  {
    for ( unsigned j = 0; j < d; ++j )
    {
      net.add_input( id( "x", k, j ) );
    }
  }

  /* shared projections */
  struct proj
  {
    char const* name;
    matrix const& w;
    std::optional<std::vector<double>> const& b;
  };
  for ( auto const& p : { proj{ "Q", cfg.w_q, cfg.b_q }, proj{ "K", cfg.w_k, cfg.b_k }, proj{ "V", cfg.w_v, cfg.b_v } } )
  {
    for ( unsigned k = 0; k < n; ++k )
    {
      for ( unsigned a = 0; a < m; ++a )
      {
        auto const u = id( p.name, k, a );
        net.add_neuron( u, activation::identity, p.b ? from_double( ( *p.b )[a] ) : rational( 0 ) );
        for ( unsigned j = 0; j < d; ++j )
        {
          net.add_edge( id( "x", k, j ), u, from_double( p.w[a][j] ) );
        }
      }
    }
  }

  /* scores s(l,k) = sum_a Q(l)_a K(k)_a, one output gate per coordinate */
  for ( unsigned l = 0; l < n; ++l )
  {
    for ( unsigned k = 0; k < n; ++k )
    {
      auto const s = id( "s", l, k );
      net.add_neuron( s );
      for ( unsigned a = 0; a < m; ++a )
      {
        auto const p = id( "P", l, k, a );
        net.add_neuron( p );
        net.add_edge( id( "Q", l, a ), p );
        net.add_output_gate( id( "K", k, a ), p );
        net.add_edge( p, s );
      }
    }
  }

  /* row softmax: w(l,k) = exp(s(l,k) - log sum_k exp s(l,k)) */
  for ( unsigned l = 0; l < n; ++l )
  {
    auto const lse = id( "L", l );
    net.add_neuron( lse, activation::log );
    for ( unsigned k = 0; k < n; ++k )
    {
      auto const e = id( "e", l, k );
      net.add_neuron( e, activation::exp );
      net.add_edge( id( "s", l, k ), e );
      net.add_edge( e, lse );
    }
    for ( unsigned k = 0; k < n; ++k )
    {
      auto const w = id( "w", l, k );
      net.add_neuron( w, activation::exp );
      net.add_edge( id( "s", l, k ), w );
      net.add_edge( lse, w, -1 );
    }
  }

  /* outputs o(l) = sum_k w(l,k) V(k) on unit edges gated by w(l,k) */
  for ( unsigned l = 0; l < n; ++l )
  {
    for ( unsigned a = 0; a < m; ++a )
    {
      net.add_neuron( id( "o", l, a ) );
    }
    for ( unsigned k = 0; k < n; ++k )
    {
      auto const group = std::to_string( l + 1 ) + "," + std::to_string( k + 1 );
      for ( unsigned a = 0; a < m; ++a )
      {
        auto const e = net.add_edge( id( "V", k, a ), id( "o", l, a ) );
        net.add_synaptic_gate( id( "w", l, k ), e, group );
      }
    }
    for ( unsigned a = 0; a < m; ++a )
    {
      net.add_output( id( "o", l, a ) );
    }
  }
  net.validate();
  return net;
}

encoder::encoder( encoder_config cfg )
    : cfg_( std::move( cfg ) ), net_( build_encoder( cfg_ ) )
{
  for ( unsigned l = 0; l < cfg_.n; ++l )
  {
    for ( unsigned k = 0; k < cfg_.n; ++k )
    {
      weight_index_.push_back( net_.network().index_of( id( "w", l, k ) ) );
    }
  }
}

forward_result encoder::forward( tokens const& inputs ) const
{
  if ( inputs.size() != cfg_.n || std::any_of( inputs.begin(), inputs.end(), [&]( auto const& t ) { return t.size() != cfg_.d_in; } ) )
  {
    throw usage_error( "expected " + std::to_string( cfg_.n ) + " tokens of size " + std::to_string( cfg_.d_in ) );
  }
  std::vector<double> flat;
  flat.reserve( cfg_.n * cfg_.d_in );
  for ( auto const& t : inputs )
  {
    flat.insert( flat.end(), t.begin(), t.end() );
  }
  auto r = net_.evaluate( flat );
  forward_result out;
  out.outputs.assign( cfg_.n, std::vector<double>( cfg_.m ) );
  for ( unsigned l = 0; l < cfg_.n; ++l )
  {
    for ( unsigned a = 0; a < cfg_.m; ++a )
    {
      out.outputs[l][a] = r.outputs[l * cfg_.m + a];
    }
  }
  out.weights.assign( cfg_.n, std::vector<double>( cfg_.n ) );
  for ( unsigned l = 0; l < cfg_.n; ++l )
  {
    for ( unsigned k = 0; k < cfg_.n; ++k )
    {
      out.weights[l][k] = r.trace.output[weight_index_[l * cfg_.n + k]];
    }
  }
  out.trace = std::move( r.trace );
  return out;
}

bool encoder::permutation_check( tokens const& inputs, std::vector<unsigned> const& perm, std::optional<tokens> const& offsets, double tol ) const
{
  auto sorted = perm;
  std::sort( sorted.begin(), sorted.end() );
  for ( unsigned i = 0; i < sorted.size(); ++i )
  {
    if ( sorted[i] != i || sorted.size() != cfg_.n )
    {
      throw usage_error( "not a permutation of the token positions" );
    }
  }
  auto add_offsets = [&]( tokens x ) {
    if ( offsets )
    {
      for ( unsigned i = 0; i < x.size(); ++i )
      {
        for ( unsigned j = 0; j < x[i].size(); ++j )
        {
          x[i][j] += ( *offsets )[i][j];
        }
      }
    }
    return x;
  };
  tokens permuted( cfg_.n );
  for ( unsigned i = 0; i < cfg_.n; ++i )
  {
    permuted[i] = inputs[perm[i]];
  }
  auto const base = forward( add_offsets( inputs ) ).outputs;
  auto const moved = forward( add_offsets( permuted ) ).outputs;
  for ( unsigned i = 0; i < cfg_.n; ++i )
  {
    for ( unsigned a = 0; a < cfg_.m; ++a )
    {
      if ( !( std::abs( moved[i][a] - base[perm[i]][a] ) <= tol ) )
      {
        return false;
      }
    }
  }
  return true;
}

tokens direct_attention( encoder_config const& cfg, tokens const& inputs )
{
  cfg.validate();
  auto const n = cfg.n;
  tokens q( n ), k( n ), v( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    q[i] = project( cfg.w_q, cfg.b_q, inputs[i] );
    k[i] = project( cfg.w_k, cfg.b_k, inputs[i] );
    v[i] = project( cfg.w_v, cfg.b_v, inputs[i] );
  }
  tokens out( n, std::vector<double>( cfg.m, 0.0 ) );
  for ( unsigned l = 0; l < n; ++l )
  {
    std::vector<double> s( n, 0.0 );
    for ( unsigned j = 0; j < n; ++j )
    {
      for ( unsigned a = 0; a < cfg.m; ++a )
      {
        s[j] += q[l][a] * k[j][a];
      }
    }
    auto const top = *std::max_element( s.begin(), s.end() );
    double z = 0;
    for ( auto& x : s )
    {
      x = std::exp( x - top );
      z += x;
    }
    for ( unsigned j = 0; j < n; ++j )
    {
      for ( unsigned a = 0; a < cfg.m; ++a )
      {
        out[l][a] += s[j] / z * v[j][a];
      }
    }
  }
  return out;
}

} // namespace quarkcap::transformer
