#pragma once

#include "formula.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnmx
{

namespace g4ip
{

/*
  Independent intuitionistic prover: Dyckhoff's contraction-free sequent
  calculus. It keeps its own term representation; negation is encoded as
  implication into a private falsum that never leaves this namespace.
*/

enum class Kind : std::uint8_t
{
  falsum,
  atom,
  conj,
  disj,
  imp
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term
{
  Kind kind;
  std::string name;
  TermPtr a;
  TermPtr b;
};

inline TermPtr make( Kind k, TermPtr a = nullptr, TermPtr b = nullptr, std::string name = {} )
{
  return std::make_shared<const Term>( Term{ k, std::move( name ), std::move( a ), std::move( b ) } );
}

inline const TermPtr& falsum()
{
  static const TermPtr f = make( Kind::falsum );
  return f;
}

inline TermPtr lower( const Formula& f )
{
  switch ( f.op() )
  {
  case Connective::atom:
    return make( Kind::atom, nullptr, nullptr, f.name() );
  case Connective::neg:
    return make( Kind::imp, lower( f.operand() ), falsum() );
  case Connective::conj:
    return make( Kind::conj, lower( f.left() ), lower( f.right() ) );
  case Connective::disj:
    return make( Kind::disj, lower( f.left() ), lower( f.right() ) );
  case Connective::imp:
    return make( Kind::imp, lower( f.left() ), lower( f.right() ) );
  default:
    throw std::invalid_argument( "the intuitionistic prover does not accept modal formulas" );
  }
}

using Context = std::vector<TermPtr>;

inline bool has_atom( const Context& ctx, const std::string& name )
{
  return std::any_of( ctx.begin(), ctx.end(),
                      [&]( const TermPtr& t ) { return t->kind == Kind::atom && t->name == name; } );
}

inline Context without( const Context& ctx, std::size_t i )
{
  Context out;
  out.reserve( ctx.size() + 1 );
  for ( std::size_t j = 0; j < ctx.size(); ++j )
    if ( j != i )
      out.push_back( ctx[j] );
  return out;
}

inline bool prove( Context ctx, const TermPtr& goal );

/// Applies one invertible left rule if possible; `result` receives the outcome.
inline bool invertible_left( const Context& ctx, const TermPtr& goal, bool& result )
{
  for ( std::size_t i = 0; i < ctx.size(); ++i )
  {
    const TermPtr& t = ctx[i];
    switch ( t->kind )
    {
    case Kind::conj:
    {
      Context next = without( ctx, i );
      next.push_back( t->a );
      next.push_back( t->b );
      result = prove( std::move( next ), goal );
      return true;
    }
    case Kind::disj:
    {
      Context l = without( ctx, i );
      Context r = l;
      l.push_back( t->a );
      r.push_back( t->b );
      result = prove( std::move( l ), goal ) && prove( std::move( r ), goal );
      return true;
    }
    case Kind::imp:
    {
      const TermPtr& ante = t->a;
      if ( ante->kind == Kind::falsum )
      {
        result = prove( without( ctx, i ), goal );
        return true;
      }
      if ( ante->kind == Kind::atom && has_atom( ctx, ante->name ) )
      {
        Context next = without( ctx, i );
        next.push_back( t->b );
        result = prove( std::move( next ), goal );
        return true;
      }
      if ( ante->kind == Kind::conj )
      {
        Context next = without( ctx, i );
        next.push_back( make( Kind::imp, ante->a, make( Kind::imp, ante->b, t->b ) ) );
        result = prove( std::move( next ), goal );
        return true;
      }
      if ( ante->kind == Kind::disj )
      {
        Context next = without( ctx, i );
        next.push_back( make( Kind::imp, ante->a, t->b ) );
        next.push_back( make( Kind::imp, ante->b, t->b ) );
        result = prove( std::move( next ), goal );
        return true;
      }
      break;
    }
    default:
      break;
    }
  }
  return false;
}

inline bool prove( Context ctx, const TermPtr& goal )
{
  for ( const auto& t : ctx )
    if ( t->kind == Kind::falsum )
      return true;
  if ( goal->kind == Kind::atom && has_atom( ctx, goal->name ) )
    return true;

  // Invertible right rules.
  if ( goal->kind == Kind::conj )
    return prove( ctx, goal->a ) && prove( std::move( ctx ), goal->b );
  if ( goal->kind == Kind::imp )
  {
    ctx.push_back( goal->a );
    return prove( std::move( ctx ), goal->b );
  }

  bool result = false;
  if ( invertible_left( ctx, goal, result ) )
    return result;

  // Non-invertible rules, with backtracking.
  if ( goal->kind == Kind::disj && ( prove( ctx, goal->a ) || prove( ctx, goal->b ) ) )
    return true;

  for ( std::size_t i = 0; i < ctx.size(); ++i )
  {
    const TermPtr& t = ctx[i];
    if ( t->kind != Kind::imp || t->a->kind != Kind::imp )
      continue;
    // (C -> D) -> B:   Γ, D -> B ⊢ C -> D   and   Γ, B ⊢ goal
    const TermPtr& c = t->a->a;
    const TermPtr& d = t->a->b;
    Context left = without( ctx, i );
    Context right = left;
    left.push_back( make( Kind::imp, d, t->b ) );
    right.push_back( t->b );
    if ( prove( std::move( left ), make( Kind::imp, c, d ) ) && prove( std::move( right ), goal ) )
      return true;
  }
  return false;
}

} // namespace g4ip

/// Derivability of `premises ⊢ conclusion` in intuitionistic propositional logic.
inline bool g4ip_prove( const std::vector<Formula>& premises, const Formula& conclusion )
{
  g4ip::Context ctx;
  for ( const auto& p : premises )
    ctx.push_back( g4ip::lower( p ) );
  return g4ip::prove( std::move( ctx ), g4ip::lower( conclusion ) );
}

inline bool g4ip_prove( const Formula& conclusion ) { return g4ip_prove( {}, conclusion ); }

} // namespace rnmx
