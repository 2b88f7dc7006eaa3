#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rnmx
{

/// Language a formula belongs to. IPL formulas never contain a box.
enum class Signature : std::uint8_t
{
  ipl,
  s4
};

enum class Connective : std::uint8_t
{
  atom,
  neg,
  box,
  conj,
  disj,
  imp
};

inline constexpr int arity( Connective c ) noexcept
{
  switch ( c )
  {
  case Connective::atom:
    return 0;
  case Connective::neg:
  case Connective::box:
    return 1;
  default:
    return 2;
  }
}

inline constexpr std::string_view signature_name( Signature s ) noexcept
{
  return s == Signature::ipl ? "ipl" : "s4";
}

/// Checks `[a-z][a-zA-Z0-9_]*`.
inline bool is_atom_name( std::string_view name ) noexcept
{
  if ( name.empty() || name[0] < 'a' || name[0] > 'z' )
    return false;
  for ( char c : name )
  {
    bool ok = ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '_';
    if ( !ok )
      return false;
  }
  return true;
}

/*! \brief Immutable propositional formula over the IPL or S4 signature.

  Nodes are shared; copying a Formula is a reference-count bump. Equality is
  structural (plus signature) and is short-circuited by a cached hash.
*/
class Formula
{
  struct Node;

public:
  static Formula atom( std::string name, Signature sig = Signature::ipl )
  {
    if ( !is_atom_name( name ) )
      throw std::invalid_argument( "invalid atom name '" + name + "'" );
    auto node = std::make_shared<Node>();
    node->op = Connective::atom;
    node->hash = std::hash<std::string>{}( name ) * 0x9e3779b97f4a7c15ull + 1;
    node->name = std::move( name );
    return Formula( std::move( node ), sig );
  }

  static Formula neg( Formula f )
  {
    return unary( Connective::neg, std::move( f ) );
  }

  static Formula box( Formula f )
  {
    if ( f.sig_ != Signature::s4 )
      throw std::invalid_argument( "box is not part of the IPL signature" );
    return unary( Connective::box, std::move( f ) );
  }

  static Formula conj( Formula l, Formula r ) { return binary( Connective::conj, std::move( l ), std::move( r ) ); }
  static Formula disj( Formula l, Formula r ) { return binary( Connective::disj, std::move( l ), std::move( r ) ); }
  static Formula imp( Formula l, Formula r ) { return binary( Connective::imp, std::move( l ), std::move( r ) ); }

  static Formula make( Connective op, Formula l, Formula r )
  {
    switch ( op )
    {
    case Connective::conj:
    case Connective::disj:
    case Connective::imp:
      return binary( op, std::move( l ), std::move( r ) );
    default:
      throw std::invalid_argument( "Formula::make expects a binary connective" );
    }
  }

  static Formula make( Connective op, Formula f )
  {
    if ( op == Connective::neg )
      return neg( std::move( f ) );
    if ( op == Connective::box )
      return box( std::move( f ) );
    throw std::invalid_argument( "Formula::make expects a unary connective" );
  }

  Connective op() const noexcept { return node_->op; }
  Signature signature() const noexcept { return sig_; }
  bool is_atom() const noexcept { return node_->op == Connective::atom; }

  const std::string& name() const noexcept { return node_->name; }

  /// Single operand of a unary node, or the left operand of a binary one.
  Formula operand() const { return Formula( node_->left, sig_ ); }
  Formula left() const { return Formula( node_->left, sig_ ); }
  Formula right() const { return Formula( node_->right, sig_ ); }

  /// co(atom) = 0, co(#a) = co(a) + 1, co(a # b) = co(a) + co(b) + 1.
  std::size_t complexity() const noexcept { return node_->complexity; }

  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==( const Formula& a, const Formula& b ) noexcept
  {
    return a.sig_ == b.sig_ && same_node( a.node_.get(), b.node_.get() );
  }

private:
  struct Node
  {
    Connective op{ Connective::atom };
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t complexity{ 0 };
    std::size_t hash{ 0 };
  };

  Formula( std::shared_ptr<const Node> node, Signature sig )
    : node_( std::move( node ) ), sig_( sig )
  {
  }

  static Formula unary( Connective op, Formula f )
  {
    auto node = std::make_shared<Node>();
    node->op = op;
    node->complexity = f.complexity() + 1;
    node->hash = mix( static_cast<std::size_t>( op ), f.hash(), 0 );
    node->left = std::move( f.node_ );
    return Formula( std::move( node ), f.sig_ );
  }

  static Formula binary( Connective op, Formula l, Formula r )
  {
    if ( l.sig_ != r.sig_ )
      throw std::invalid_argument( "operands belong to different signatures" );
    auto node = std::make_shared<Node>();
    node->op = op;
    node->complexity = l.complexity() + r.complexity() + 1;
    node->hash = mix( static_cast<std::size_t>( op ), l.hash(), r.hash() );
    node->left = std::move( l.node_ );
    node->right = std::move( r.node_ );
    return Formula( std::move( node ), l.sig_ );
  }

  static std::size_t mix( std::size_t op, std::size_t a, std::size_t b ) noexcept
  {
    std::size_t h = op * 0x100000001b3ull + 0xcbf29ce484222325ull;
    h ^= a + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    h ^= b + 0x7f4a7c159e3779b9ull + ( h << 6 ) + ( h >> 2 );
    return h;
  }

  static bool same_node( const Node* a, const Node* b ) noexcept
  {
    if ( a == b )
      return true;
    if ( a == nullptr || b == nullptr )
      return false;
    if ( a->hash != b->hash || a->op != b->op || a->complexity != b->complexity )
      return false;
    if ( a->op == Connective::atom )
      return a->name == b->name;
    return same_node( a->left.get(), b->left.get() ) && same_node( a->right.get(), b->right.get() );
  }

  std::shared_ptr<const Node> node_;
  Signature sig_;
};

struct FormulaHash
{
  std::size_t operator()( const Formula& f ) const noexcept { return f.hash(); }
};

inline std::size_t complexity( const Formula& f ) noexcept { return f.complexity(); }

/*! \brief Finite, subformula-closed, duplicate-free set of formulas.

  Columns are ordered by non-decreasing complexity; ties keep the order of
  first occurrence in a pre-order (root, left, right) walk over the roots.
*/
class SubformulaClosure
{
public:
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  std::size_t size() const noexcept { return formulas_.size(); }
  const Formula& operator[]( std::size_t i ) const { return formulas_[i]; }
  Signature signature() const noexcept { return formulas_.front().signature(); }

  /// Column of `f`, or size() when absent.
  std::size_t index_of( const Formula& f ) const
  {
    auto it = index_.find( f );
    return it == index_.end() ? formulas_.size() : it->second;
  }

  bool contains( const Formula& f ) const { return index_.count( f ) != 0; }

  /// Column indices of the immediate subformulas of column `i` (empty for atoms).
  const std::vector<std::size_t>& children( std::size_t i ) const { return children_[i]; }

  friend bool operator==( const SubformulaClosure& a, const SubformulaClosure& b ) { return a.formulas_ == b.formulas_; }

  friend SubformulaClosure subformula_closure( const std::vector<Formula>& roots );

private:
  std::vector<Formula> formulas_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<std::vector<std::size_t>> children_;
};

inline SubformulaClosure subformula_closure( const std::vector<Formula>& roots )
{
  if ( roots.empty() )
    throw std::invalid_argument( "subformula closure needs at least one root" );
  for ( const auto& r : roots )
    if ( r.signature() != roots.front().signature() )
      throw std::invalid_argument( "closure roots belong to different signatures" );

  std::vector<Formula> preorder;
  std::unordered_map<Formula, std::size_t, FormulaHash> seen;
  std::vector<Formula> stack;
  for ( auto it = roots.rbegin(); it != roots.rend(); ++it )
    stack.push_back( *it );
  // Explicit stack; children are pushed right-first so the left subtree is visited first.
  while ( !stack.empty() )
  {
    Formula f = std::move( stack.back() );
    stack.pop_back();
    if ( seen.count( f ) )
      continue;
    seen.emplace( f, preorder.size() );
    preorder.push_back( f );
    switch ( arity( f.op() ) )
    {
    case 1:
      stack.push_back( f.operand() );
      break;
    case 2:
      stack.push_back( f.right() );
      stack.push_back( f.left() );
      break;
    default:
      break;
    }
  }

  std::stable_sort( preorder.begin(), preorder.end(),
                    []( const Formula& a, const Formula& b ) { return a.complexity() < b.complexity(); } );

  SubformulaClosure c;
  c.formulas_ = std::move( preorder );
  for ( std::size_t i = 0; i < c.formulas_.size(); ++i )
    c.index_.emplace( c.formulas_[i], i );
  c.children_.resize( c.formulas_.size() );
  for ( std::size_t i = 0; i < c.formulas_.size(); ++i )
  {
    const auto& f = c.formulas_[i];
    if ( arity( f.op() ) >= 1 )
      c.children_[i].push_back( c.index_.at( f.left() ) );
    if ( arity( f.op() ) == 2 )
      c.children_[i].push_back( c.index_.at( f.right() ) );
  }
  return c;
}

/// The complexity-0 subformulas of `f`, in closure order.
inline std::vector<Formula> atoms( const Formula& f )
{
  std::vector<Formula> result;
  SubformulaClosure c = subformula_closure( { f } );
  for ( const auto& g : c.formulas() )
    if ( g.complexity() == 0 )
      result.push_back( g );
  return result;
}

enum class Style : std::uint8_t
{
  ascii,
  unicode
};

namespace detail
{

inline int precedence( Connective c ) noexcept
{
  switch ( c )
  {
  case Connective::imp:
    return 1;
  case Connective::disj:
    return 2;
  case Connective::conj:
    return 3;
  default:
    return 4;
  }
}

inline std::string_view symbol( Connective c, Style s ) noexcept
{
  bool u = s == Style::unicode;
  switch ( c )
  {
  case Connective::neg:
    return u ? "¬" : "~";
  case Connective::box:
    return u ? "□" : "[]";
  case Connective::conj:
    return u ? " ∧ " : " /\\ ";
  case Connective::disj:
    return u ? " ∨ " : " \\/ ";
  case Connective::imp:
    return u ? " → " : " -> ";
  default:
    return "";
  }
}

inline void print_into( const Formula& f, Style s, std::string& out )
{
  auto wrapped = [&]( const Formula& g, bool parens ) {
    if ( parens )
      out += '(';
    print_into( g, s, out );
    if ( parens )
      out += ')';
  };

  switch ( arity( f.op() ) )
  {
  case 0:
    out += f.name();
    return;
  case 1:
    out += symbol( f.op(), s );
    wrapped( f.operand(), arity( f.operand().op() ) == 2 );
    return;
  default:
    break;
  }

  int p = precedence( f.op() );
  int lp = precedence( f.left().op() );
  int rp = precedence( f.right().op() );
  // Conjunction and disjunction associate to the left, implication to the right;
  // a nested implication on the right is still parenthesized.
  bool left_parens = lp < p || ( lp == p && f.op() == Connective::imp );
  bool right_parens = rp <= p;
  wrapped( f.left(), left_parens );
  out += symbol( f.op(), s );
  wrapped( f.right(), right_parens );
}

} // namespace detail

inline std::string print( const Formula& f, Style style = Style::ascii )
{
  std::string out;
  detail::print_into( f, style, out );
  return out;
}

} // namespace rnmx

template <>
struct std::hash<rnmx::Formula>
{
  std::size_t operator()( const rnmx::Formula& f ) const noexcept { return f.hash(); }
};
