#pragma once

#include "formula.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rnmx
{

/// Syntax error; `offset` is the byte offset of the offending token.
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& message, std::size_t offset, std::string token )
    : std::runtime_error( message + " at offset " + std::to_string( offset ) ),
      offset_( offset ),
      token_( std::move( token ) )
  {
  }

  std::size_t offset() const noexcept { return offset_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t offset_;
  std::string token_;
};

namespace detail
{

enum class Tok : std::uint8_t
{
  atom,
  neg,
  box,
  conj,
  disj,
  imp,
  lparen,
  rparen,
  end
};

struct Token
{
  Tok kind;
  std::size_t offset;
  std::string text;
};

/*
  Grammar:
    formula := imp
    imp     := or ( "->" imp )?
    or      := and ( ( "\/" | "|" ) and )*
    and     := unary ( ( "/\" | "&" ) unary )*
    unary   := "~" unary | "[]" unary | atom | "(" formula ")"
  Unicode aliases: ¬ ∧ ∨ → □.
*/
class Parser
{
public:
  Parser( std::string_view text, Signature sig ) : text_( text ), sig_( sig ) { advance(); }

  Formula parse()
  {
    Formula f = parse_imp();
    if ( current_.kind != Tok::end )
      fail( "unexpected token '" + current_.text + "'" );
    return f;
  }

private:
  Formula parse_imp()
  {
    Formula lhs = parse_or();
    if ( current_.kind == Tok::imp )
    {
      advance();
      return Formula::imp( std::move( lhs ), parse_imp() );
    }
    return lhs;
  }

  Formula parse_or()
  {
    Formula lhs = parse_and();
    while ( current_.kind == Tok::disj )
    {
      advance();
      lhs = Formula::disj( std::move( lhs ), parse_and() );
    }
    return lhs;
  }

  Formula parse_and()
  {
    Formula lhs = parse_unary();
    while ( current_.kind == Tok::conj )
    {
      advance();
      lhs = Formula::conj( std::move( lhs ), parse_unary() );
    }
    return lhs;
  }

  Formula parse_unary()
  {
    switch ( current_.kind )
    {
    case Tok::neg:
      advance();
      return Formula::neg( parse_unary() );
    case Tok::box:
      if ( sig_ != Signature::s4 )
        fail( "box operator '" + current_.text + "' is not allowed in IPL formulas" );
      advance();
      return Formula::box( parse_unary() );
    case Tok::atom:
    {
      std::string name = current_.text;
      advance();
      return Formula::atom( std::move( name ), sig_ );
    }
    case Tok::lparen:
    {
      advance();
      Formula inner = parse_imp();
      if ( current_.kind != Tok::rparen )
        fail( current_.kind == Tok::end ? "missing ')'" : "expected ')' but found '" + current_.text + "'" );
      advance();
      return inner;
    }
    case Tok::end:
      fail( "unexpected end of input" );
    default:
      fail( "unexpected token '" + current_.text + "'" );
    }
  }

  [[noreturn]] void fail( const std::string& message ) const
  {
    throw parse_error( message, current_.offset, current_.text );
  }

  bool lookahead( std::string_view s ) const { return text_.substr( pos_, s.size() ) == s; }

  void advance()
  {
    while ( pos_ < text_.size() && ( text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r' ) )
      ++pos_;
    std::size_t start = pos_;
    if ( pos_ >= text_.size() )
    {
      current_ = { Tok::end, start, "" };
      return;
    }

    static constexpr struct
    {
      std::string_view spelling;
      Tok kind;
    } symbols[] = {
        { "->", Tok::imp }, { "→", Tok::imp }, { "/\\", Tok::conj }, { "&", Tok::conj }, { "∧", Tok::conj },
        { "\\/", Tok::disj }, { "|", Tok::disj }, { "∨", Tok::disj }, { "~", Tok::neg }, { "¬", Tok::neg },
        { "[]", Tok::box }, { "□", Tok::box }, { "(", Tok::lparen }, { ")", Tok::rparen } };
    for ( const auto& s : symbols )
    {
      if ( lookahead( s.spelling ) )
      {
        pos_ += s.spelling.size();
        current_ = { s.kind, start, std::string( s.spelling ) };
        return;
      }
    }

    char c = text_[pos_];
    if ( c >= 'a' && c <= 'z' )
    {
      while ( pos_ < text_.size() )
      {
        char d = text_[pos_];
        if ( ( d >= 'a' && d <= 'z' ) || ( d >= 'A' && d <= 'Z' ) || ( d >= '0' && d <= '9' ) || d == '_' )
          ++pos_;
        else
          break;
      }
      current_ = { Tok::atom, start, std::string( text_.substr( start, pos_ - start ) ) };
      return;
    }

    // Report the whole UTF-8 sequence for non-ASCII input.
    std::size_t len = 1;
    auto lead = static_cast<unsigned char>( c );
    if ( lead >= 0xf0 )
      len = 4;
    else if ( lead >= 0xe0 )
      len = 3;
    else if ( lead >= 0xc0 )
      len = 2;
    current_ = { Tok::end, start, std::string( text_.substr( start, len ) ) };
    fail( "unexpected character '" + current_.text + "'" );
  }

  std::string_view text_;
  Signature sig_;
  std::size_t pos_{ 0 };
  Token current_{ Tok::end, 0, "" };
};

} // namespace detail

/// Parses `text` into a formula of signature `sig`. Throws parse_error.
inline Formula parse( std::string_view text, Signature sig )
{
  if ( text.find_first_not_of( " \t\r\n" ) == std::string_view::npos )
    throw parse_error( "empty formula", 0, "" );
  return detail::Parser( text, sig ).parse();
}

} // namespace rnmx
