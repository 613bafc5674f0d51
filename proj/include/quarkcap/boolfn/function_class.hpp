// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace quarkcap::boolfn
{

/*! \brief Deduplicated set of truth tables of one arity and one encoding. */
class function_class
{
public:
  using container = std::set<truth_table>;
  using const_iterator = container::const_iterator;

  function_class() = default;
  function_class( unsigned n, encoding enc );

  /*! \brief Builds a class from packed words of n <= 6 variables. */
  static function_class from_words( unsigned n, std::span<std::uint64_t const> words, encoding enc = encoding::plus_minus );

  unsigned arity() const { return n_; }
  encoding enc() const { return enc_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /*! \brief Returns true if the member was new. */
  bool insert( truth_table const& t );
  bool contains( truth_table const& t ) const;

  /*! \brief Associative union; used to merge worker-local partitions. */
  void merge( function_class&& other );

  bool is_subset_of( function_class const& other ) const;

  /*! \brief Members as packed words (n <= 6), ascending. */
  std::vector<std::uint64_t> words() const;

  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  friend bool operator==( function_class const&, function_class const& ) = default;

private:
  void check( truth_table const& t ) const;

  unsigned n_ = 0;
  encoding enc_ = encoding::plus_minus;
  container members_;
};

/*! \brief Cardinal capacity log2 |class|. */
double capacity( function_class const& c );

} // namespace quarkcap::boolfn
