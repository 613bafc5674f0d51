// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/threshold/lp.hpp>

#include <gmp.h>

namespace quarkcap::threshold
{

namespace
{

/* dense Phase I tableau; column `cols` holds the right-hand side, row `rows` the reduced costs */
class tableau
{
public:
  tableau( std::size_t rows, std::size_t cols )
      : rows_( rows ), cols_( cols ), cells_( ( rows + 1 ) * ( cols + 1 ) ), basis_( rows )
  {
  }

  mpq_class& at( std::size_t r, std::size_t c ) { return cells_[r * ( cols_ + 1 ) + c]; }
  mpq_class const& at( std::size_t r, std::size_t c ) const { return cells_[r * ( cols_ + 1 ) + c]; }
  mpq_class& cost( std::size_t c ) { return at( rows_, c ); }
  mpq_class& rhs( std::size_t r ) { return at( r, cols_ ); }
  std::size_t& basic( std::size_t r ) { return basis_[r]; }

  /* Bland's rule: lowest-index improving column, ties in the ratio test by lowest basic index */
  unsigned run()
  {
    unsigned pivots = 0;
    mpq_class ratio, best;
    for ( ;; )
    {
      std::size_t enter = cols_;
      for ( std::size_t c = 0; c < cols_; ++c )
      {
        if ( sgn( cost( c ) ) < 0 )
        {
          enter = c;
          break;
        }
      }
      if ( enter == cols_ )
      {
        return pivots;
      }
      std::size_t leave = rows_;
      for ( std::size_t r = 0; r < rows_; ++r )
      {
        if ( sgn( at( r, enter ) ) <= 0 )
        {
          continue;
        }
        mpq_div( ratio.get_mpq_t(), rhs( r ).get_mpq_t(), at( r, enter ).get_mpq_t() );
        if ( leave == rows_ || ratio < best || ( ratio == best && basis_[r] < basis_[leave] ) )
        {
          leave = r;
          mpq_swap( best.get_mpq_t(), ratio.get_mpq_t() );
        }
      }
      if ( leave == rows_ )
      {
        /* Phase I is bounded below by zero */
        throw internal_error( "unbounded Phase I simplex" );
      }
      pivot( leave, enter );
      ++pivots;
    }
  }

private:
  void pivot( std::size_t pr, std::size_t pc )
  {
    mpq_class inv, factor, tmp;
    mpq_inv( inv.get_mpq_t(), at( pr, pc ).get_mpq_t() );
    for ( std::size_t c = 0; c <= cols_; ++c )
    {
      if ( sgn( at( pr, c ) ) != 0 )
      {
        mpq_mul( at( pr, c ).get_mpq_t(), at( pr, c ).get_mpq_t(), inv.get_mpq_t() );
      }
    }
    for ( std::size_t r = 0; r <= rows_; ++r )
    {
      if ( r == pr || sgn( at( r, pc ) ) == 0 )
      {
        continue;
      }
      factor = at( r, pc );
      for ( std::size_t c = 0; c <= cols_; ++c )
      {
        if ( sgn( at( pr, c ) ) == 0 )
        {
          continue;
        }
        mpq_mul( tmp.get_mpq_t(), factor.get_mpq_t(), at( pr, c ).get_mpq_t() );
        mpq_sub( at( r, c ).get_mpq_t(), at( r, c ).get_mpq_t(), tmp.get_mpq_t() );
      }
    }
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> cells_;
  std::vector<std::size_t> basis_;
};

} // namespace

separability_lp::separability_lp( unsigned n, unsigned d )
    : n_( n ), d_( d ), monomials_( monomials( n, d ) )
{
  if ( n > 10 )
  {
    throw arity_error( "exact separability oracle supports at most 10 inputs" );
  }
}

separability_lp::result separability_lp::solve( boolfn::truth_table const& t ) const
{
  if ( t.arity() != n_ )
  {
    throw arity_error( "table arity does not match the oracle" );
  }
  auto const points = static_cast<std::size_t>( t.size() );
  auto const dims = monomials_.size();
  auto const rows = dims + 1;
  auto const cols = points + rows;

  /* rows j < dims: sum_x s_x [m_j subset of x] lambda_x = 0; last row: sum_x lambda_x = 1 */
  tableau tab( rows, cols );
  for ( std::size_t x = 0; x < points; ++x )
  {
    int const s = t.get( x ) ? 1 : -1;
    int column_sum = 1;
    for ( std::size_t j = 0; j < dims; ++j )
    {
      if ( ( monomials_[j] & x ) == monomials_[j] )
      {
        tab.at( j, x ) = s;
        column_sum += s;
      }
    }
    tab.at( dims, x ) = 1;
    tab.cost( x ) = -column_sum;
  }
  for ( std::size_t r = 0; r < rows; ++r )
  {
    tab.at( r, points + r ) = 1;
    tab.basic( r ) = points + r;
  }
  tab.rhs( dims ) = 1;
  tab.cost( cols ) = -1;

  result res;
  res.pivots = tab.run();

  if ( sgn( tab.cost( cols ) ) == 0 )
  {
    /* a convex combination of the signed feature rows vanishes */
    res.infeasibility.assign( points, rational( 0 ) );
    for ( std::size_t r = 0; r < rows; ++r )
    {
      if ( tab.basic( r ) < points )
      {
        res.infeasibility[tab.basic( r )] = tab.rhs( r );
      }
    }
    rational total = 0;
    std::vector<rational> combo( dims, rational( 0 ) );
    for ( std::size_t x = 0; x < points; ++x )
    {
      auto const& l = res.infeasibility[x];
      if ( sgn( l ) < 0 )
      {
        throw internal_error( "negative multiplier in inseparability certificate" );
      }
      total += l;
      for ( std::size_t j = 0; j < dims; ++j )
      {
        if ( ( monomials_[j] & x ) == monomials_[j] )
        {
          combo[j] += t.get( x ) ? l : rational( -l );
        }
      }
    }
    if ( total != 1 )
    {
      throw internal_error( "inseparability certificate is not a convex combination" );
    }
    for ( auto const& c : combo )
    {
      if ( sgn( c ) != 0 )
      {
        throw internal_error( "inseparability certificate does not vanish" );
      }
    }
    return res;
  }

  /* Phase I duals: y_r = 1 - reduced cost of artificial r; a = -y_{<dims} / y_dims */
  std::vector<rational> y( rows );
  for ( std::size_t r = 0; r < rows; ++r )
  {
    y[r] = 1 - tab.cost( points + r );
  }
  if ( sgn( y[dims] ) <= 0 )
  {
    throw internal_error( "Phase I dual has non-positive objective" );
  }

  /* scale to a primitive integer vector; integer values with a positive signed margin are >= 1 */
  mpz_class lcm = 1, gcd = 0;
  std::vector<rational> a( dims );
  for ( std::size_t j = 0; j < dims; ++j )
  {
    a[j] = -y[j] / y[dims];
    mpz_lcm( lcm.get_mpz_t(), lcm.get_mpz_t(), a[j].get_den_mpz_t() );
  }
  for ( auto& v : a )
  {
    v *= lcm;
    mpz_gcd( gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_num_mpz_t() );
  }
  poly_weights w( n_, d_ );
  for ( std::size_t j = 0; j < dims; ++j )
  {
    if ( gcd > 1 )
    {
      a[j] /= gcd;
    }
    w.set( monomials_[j], a[j] );
  }
  for ( boolfn::assignment x = 0; x < points; ++x )
  {
    auto const v = w.value( x );
    if ( t.get( x ) ? v < 1 : v > -1 )
    {
      throw internal_error( "separating certificate violates the unit margin" );
    }
  }
  res.weights = std::move( w );
  return res;
}

} // namespace quarkcap::threshold
