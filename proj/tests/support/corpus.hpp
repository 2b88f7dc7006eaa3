#pragma once

#include <rnmx/formula.hpp>

#include <random>
#include <string>
#include <vector>

namespace rnmx::ref
{

/// Every formula over `atoms` with exactly n connectives, for n = 0..max. Grouped by size.
inline std::vector<std::vector<Formula>> formulas_by_size( const std::vector<std::string>& atoms, std::size_t max,
                                                           Signature sig = Signature::ipl )
{
  std::vector<std::vector<Formula>> by( max + 1 );
  for ( const auto& a : atoms )
    by[0].push_back( Formula::atom( a, sig ) );
  std::vector<Connective> unary{ Connective::neg };
  if ( sig == Signature::s4 )
    unary.push_back( Connective::box );
  const Connective binary[] = { Connective::conj, Connective::disj, Connective::imp };
  for ( std::size_t n = 1; n <= max; ++n )
  {
    for ( Connective u : unary )
      for ( const auto& f : by[n - 1] )
        by[n].push_back( Formula::make( u, f ) );
    for ( Connective b : binary )
      for ( std::size_t i = 0; i < n; ++i )
        for ( const auto& l : by[i] )
          for ( const auto& r : by[n - 1 - i] )
            by[n].push_back( Formula::make( b, l, r ) );
  }
  return by;
}

inline std::vector<Formula> exhaustive( const std::vector<std::string>& atoms, std::size_t max,
                                        Signature sig = Signature::ipl )
{
  std::vector<Formula> out;
  for ( auto& level : formulas_by_size( atoms, max, sig ) )
    out.insert( out.end(), level.begin(), level.end() );
  return out;
}

/// Random formula with exactly `size` connectives.
inline Formula random_formula_of_size( std::mt19937& rng, const std::vector<std::string>& atoms, std::size_t size,
                                       Signature sig = Signature::ipl )
{
  if ( size == 0 )
    return Formula::atom( atoms[std::uniform_int_distribution<std::size_t>( 0, atoms.size() - 1 )( rng )], sig );
  const int kinds = sig == Signature::s4 ? 5 : 4;
  switch ( std::uniform_int_distribution<int>( 0, kinds - 1 )( rng ) )
  {
  case 0:
    return Formula::neg( random_formula_of_size( rng, atoms, size - 1, sig ) );
  case 4:
    return Formula::box( random_formula_of_size( rng, atoms, size - 1, sig ) );
  default:
  {
    static const Connective binary[] = { Connective::conj, Connective::disj, Connective::imp };
    Connective c = binary[std::uniform_int_distribution<int>( 0, 2 )( rng )];
    std::size_t left = std::uniform_int_distribution<std::size_t>( 0, size - 1 )( rng );
    return Formula::make( c, random_formula_of_size( rng, atoms, left, sig ),
                          random_formula_of_size( rng, atoms, size - 1 - left, sig ) );
  }
  }
}

/// Random formula with at most `max` connectives over at most `max_atoms` of p, q, r, s.
inline Formula random_formula( std::mt19937& rng, std::size_t max, std::size_t max_atoms = 3,
                               Signature sig = Signature::ipl )
{
  static const std::vector<std::string> pool{ "p", "q", "r", "s" };
  std::size_t k = std::uniform_int_distribution<std::size_t>( 1, max_atoms )( rng );
  std::vector<std::string> atoms( pool.begin(), pool.begin() + static_cast<long>( k ) );
  std::size_t size = std::uniform_int_distribution<std::size_t>( 0, max )( rng );
  return random_formula_of_size( rng, atoms, size, sig );
}

} // namespace rnmx::ref
