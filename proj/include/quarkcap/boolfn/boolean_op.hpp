// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quarkcap::boolfn
{

/*! \brief Boolean operator B(z_1, ..., z_k) on -/+ arguments, k <= 6.
 *
 * Entry e of the table is the output for the argument vector whose bit i
 * is set iff z_{i+1} = +1 (true). For k = 2, z_1 = p is the low bit and
 * z_2 = q the high bit, so AND is 0b1000 and OR is 0b1110.
 */
class boolean_op
{
public:
  static constexpr unsigned max_arity = 6u;

  boolean_op( unsigned k, std::uint64_t table );

  /*! \brief Named binary/unary operators (AND, OR, XOR, NXOR, NAND, NOR, T, F, P, Q,
   *  NOT_P, NOT_Q, P_AND_NOT_Q, NOT_P_AND_Q, P_OR_NOT_Q, NOT_P_OR_Q, NOT, ID)
   *  or a hex table ("0x8", "8") read as a binary operator.
   *  "PRODUCT" resolves to NXOR under -/+ and to AND under 0/1.
   */
  static boolean_op parse( std::string_view text, encoding enc = encoding::plus_minus );

  static boolean_op negation() { return boolean_op( 1, 0b01 ); }

  /*! \brief All 16 binary operators in table order. */
  static std::vector<boolean_op> all_binary();

  unsigned arity() const { return k_; }
  std::uint64_t table() const { return table_; }

  bool apply( std::uint64_t args ) const { return ( table_ >> args ) & 1u; }

  /*! \brief Does the output change with argument i for some setting of the others? */
  bool depends_on( unsigned i ) const;

  bool is_symmetric() const;

  boolean_op negated() const;

  /*! \brief Conventional name for k <= 2, hex form otherwise. */
  std::string name() const;

  friend bool operator==( boolean_op const&, boolean_op const& ) = default;

private:
  unsigned k_;
  std::uint64_t table_;
};

/*! \brief True iff B depends on every one of its arguments. */
bool is_irreducible( boolean_op const& op );

/*! \brief Pointwise B(f_1, ..., f_k); output encoding -/+.
 *
 * Arguments must share arity and encoding. 0/1 arguments are re-encoded to
 * -/+ (same bits) before combination; mixing encodings is an error.
 */
truth_table combine( boolean_op const& op, std::span<truth_table const> args );

/*! \brief Word-parallel combine on packed tables of n <= 6 variables. */
std::uint64_t combine_words( boolean_op const& op, std::span<std::uint64_t const> args, unsigned n );

} // namespace quarkcap::boolfn
