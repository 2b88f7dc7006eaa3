#pragma once

#include "formula.hpp"
#include "nmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace rnmx
{

namespace detail
{

inline void require_ipl( const Formula& f )
{
  if ( f.signature() != Signature::ipl )
    throw std::invalid_argument( "translation expects an IPL formula" );
}

inline Formula box_translate_unchecked( const Formula& f )
{
  switch ( f.op() )
  {
  case Connective::atom:
    return Formula::box( Formula::atom( f.name(), Signature::s4 ) );
  case Connective::neg:
    return Formula::box( Formula::neg( box_translate_unchecked( f.operand() ) ) );
  default:
    return Formula::box(
        Formula::make( f.op(), box_translate_unchecked( f.left() ), box_translate_unchecked( f.right() ) ) );
  }
}

} // namespace detail

/// Goedel-McKinsey-Tarski embedding: a box in front of every subformula.
inline Formula box_translate( const Formula& f )
{
  detail::require_ipl( f );
  return detail::box_translate_unchecked( f );
}

/// The box translation with the outermost box stripped.
inline Formula semi_translate( const Formula& f )
{
  detail::require_ipl( f );
  switch ( f.op() )
  {
  case Connective::atom:
    return Formula::atom( f.name(), Signature::s4 );
  case Connective::neg:
    return Formula::neg( detail::box_translate_unchecked( f.operand() ) );
  default:
    return Formula::make( f.op(), detail::box_translate_unchecked( f.left() ),
                          detail::box_translate_unchecked( f.right() ) );
  }
}

struct TranslationResult
{
  Formula source;
  Formula boxed;
  Formula semi;
};

inline TranslationResult translate( const Formula& f )
{
  return { f, box_translate( f ), semi_translate( f ) };
}

/// Pair encoding <c; box(c)> of an intuitionistic value.
struct ValuePair
{
  Value first;
  Value second;
};

inline ValuePair encode( IplValue v )
{
  switch ( v )
  {
  case IplValue::F:
    return { 0, 0 };
  case IplValue::U:
    return { 1, 0 };
  default:
    return { 2, 2 };
  }
}

/// Inverse of encode() on the image of c -> <c; box(c)>.
inline IplValue decode( ValuePair p )
{
  if ( p.first == 0 && p.second == 0 )
    return IplValue::F;
  if ( p.first == 1 && p.second == 0 )
    return IplValue::U;
  if ( p.first == 2 && p.second == 2 )
    return IplValue::T;
  throw std::invalid_argument( "pair is not an intuitionistic truth value" );
}

/*! \brief Intuitionistic multioperation derived from the S4 tables.

  Negation applies the S4 negation to the second component of its argument;
  binary connectives apply the reduced S4 table to the second components.
  Every output c is re-encoded as <c; box(c)>.
*/
inline OpTable derive_ipl_multiop( Connective c )
{
  const Nmatrix& s4 = m_s4();
  const Nmatrix& s4r = m_s4_reduced();
  static constexpr IplValue all[] = { IplValue::F, IplValue::U, IplValue::T };

  auto reencode = [&]( ValueSet s4_out ) {
    ValueSet out;
    for ( Value e : s4_out.values() )
    {
      ValueSet boxed = s4.cell( Connective::box, e );
      out.insert( static_cast<Value>( decode( { e, boxed.values().front() } ) ) );
    }
    return out;
  };

  OpTable t;
  switch ( c )
  {
  case Connective::neg:
    t.arity = 1;
    for ( IplValue a : all )
      t.cells.push_back( reencode( s4.cell( Connective::neg, encode( a ).second ) ) );
    return t;
  case Connective::imp:
  case Connective::disj:
  case Connective::conj:
    t.arity = 2;
    for ( IplValue a : all )
      for ( IplValue b : all )
        t.cells.push_back( reencode( s4r.cell( c, encode( a ).second, encode( b ).second ) ) );
    return t;
  default:
    throw std::invalid_argument( "no intuitionistic multioperation for this connective" );
  }
}

} // namespace rnmx
