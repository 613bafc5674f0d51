// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quarkcap::boolfn
{

/*! \brief Interpretation of a stored bit: 0/1 or -1/+1. */
enum class encoding : std::uint8_t
{
  zero_one,
  plus_minus
};

std::string_view to_string( encoding e );
encoding parse_encoding( std::string_view text );

/*! \brief Largest supported arity (2^26 bits = 8 MiB per table). */
inline constexpr unsigned max_arity = 26u;

/*! \brief Index of a cube point; bit i is the 0/1 value of x_{i+1}. */
using assignment = std::uint64_t;

inline bool input_bit( assignment x, unsigned i ) { return ( x >> i ) & 1u; }

/*! \brief Boolean function of n variables stored as a 2^n-bit vector.
 *
 * Bit x holds the output at the cube point whose binary digits are the 0/1
 * inputs, x_1 being the least significant digit. A set bit means "true",
 * i.e. 1 in the 0/1 encoding and +1 in the -/+ encoding.
 */
class truth_table
{
public:
  truth_table() = default;
  explicit truth_table( unsigned n, encoding enc = encoding::plus_minus );

  /*! \brief Table of at most 6 variables from a packed word. */
  static truth_table from_word( unsigned n, std::uint64_t bits, encoding enc = encoding::plus_minus );

  /*! \brief Table from explicit output bits in index order. */
  static truth_table from_bits( std::initializer_list<int> bits, encoding enc = encoding::plus_minus );

  /*! \brief Table from output values (0/1 or -1/+1 according to `enc`). */
  static truth_table from_values( std::span<int const> values, encoding enc );

  /*! \brief Parses the canonical text form `n:<k>;enc:<01|pm>;bits:<hex>`. */
  static truth_table parse( std::string_view text );

  unsigned arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{ 1 } << n_; }
  encoding enc() const { return enc_; }

  bool get( assignment x ) const { return ( words_[x >> 6] >> ( x & 63u ) ) & 1u; }
  void set( assignment x, bool value );

  /*! \brief Output as a number: 0/1 or -1/+1 depending on the encoding. */
  int value( assignment x ) const;

  /*! \brief Packed bits; only valid for n <= 6. */
  std::uint64_t word() const;
  std::span<std::uint64_t const> words() const { return words_; }

  /*! \brief Same bits, other interpretation tag. */
  truth_table reencoded( encoding enc ) const;

  /*! \brief Pointwise logical negation. */
  truth_table operator~() const;

  std::uint64_t count_ones() const;

  /*! \brief Canonical text form; hex nibbles in increasing input order, each nibble little-endian. */
  std::string to_string() const;

  /*! \brief Bits only, as "(0,1,1,0)" or "(-1,1,1,-1)". */
  std::string to_values_string() const;

  friend bool operator==( truth_table const&, truth_table const& ) = default;
  friend std::strong_ordering operator<=>( truth_table const& a, truth_table const& b );

  std::size_t hash() const;

private:
  void mask_tail();

  unsigned n_ = 0;
  encoding enc_ = encoding::plus_minus;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>( 1, 0 );
};

/*! \brief Mask of the valid bits of a packed table of n <= 6 variables. */
inline std::uint64_t word_mask( unsigned n )
{
  return n >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n ) ) - 1u );
}

/*! \brief Tabulates `evaluator(x) -> bool` over all 2^n assignments in index order. */
template<typename Fn>
truth_table tabulate( unsigned n, Fn&& evaluator, encoding enc = encoding::plus_minus )
{
  truth_table t( n, enc );
  for ( assignment x = 0; x < t.size(); ++x )
  {
    if ( evaluator( x ) )
    {
      t.set( x, true );
    }
  }
  return t;
}

} // namespace quarkcap::boolfn

template<>
struct std::hash<quarkcap::boolfn::truth_table>
{
  std::size_t operator()( quarkcap::boolfn::truth_table const& t ) const noexcept { return t.hash(); }
};
