#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmbal/complex.hpp"
#include "cmbal/exact_linalg.hpp"

namespace cmbal {

/// Exponent vector over a fixed, indexed variable set.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_variables) : exponents_(num_variables, 0) {}
  explicit Monomial(std::vector<std::uint8_t> exponents);
  static Monomial variable(std::size_t num_variables, std::size_t v);
  /// Squarefree monomial on the given vertex indices.
  static Monomial squarefree(std::size_t num_variables, VertexSet support);

  std::size_t num_variables() const { return exponents_.size(); }
  int exponent(std::size_t v) const { return exponents_[v]; }
  const std::vector<std::uint8_t>& exponents() const { return exponents_; }
  int degree() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  VertexSet support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint8_t> exponents_;
};

/// A total order on the variables; monomials are compared in graded revlex.
/// T (the parameter variables) is the last d variables of the order.
class TermOrder {
 public:
  TermOrder() = default;
  /// `sequence[k]` is the variable in position k (position 0 comes first).
  explicit TermOrder(std::vector<std::size_t> sequence);
  static TermOrder natural(std::size_t num_variables);

  std::size_t num_variables() const { return sequence_.size(); }
  std::size_t variable_at(std::size_t position) const { return sequence_[position]; }
  std::size_t position_of(std::size_t variable) const { return position_[variable]; }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  /// The last d variables.
  std::vector<std::size_t> last(std::size_t d) const;

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// less: a ≺ b. Lower degree is smaller; within a degree a ≺ b iff the last
/// variable (in the order) where the exponents differ has the larger exponent in a.
std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b, const TermOrder& order);

/// The part of m supported on the variables in `subset`.
Monomial support_part(const Monomial& m, const std::vector<bool>& subset);

/// All degree-`degree` monomials in the variables flagged by `allowed`.
std::vector<Monomial> monomials_of_degree(std::size_t num_variables, const std::vector<bool>& allowed, int degree);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Monomial& m, Rational coefficient = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Throws InputError for the zero polynomial or non-homogeneous input.
  int homogeneous_degree() const;
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  /// The ≺-largest monomial.
  Monomial leading_monomial(const TermOrder& order) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p);
  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Graded automorphism of k[X] given by its action on the variables:
/// g(x_j) = Σ_i matrix(i, j) x_i.
struct LinearAutomorphism {
  RationalMatrix matrix;

  static LinearAutomorphism identity(std::size_t n) { return {RationalMatrix::identity(n)}; }
  std::size_t size() const { return matrix.rows(); }
  /// Throws InputError if the matrix is singular.
  LinearAutomorphism inverse() const;
  Polynomial image_of_variable(std::size_t j) const;
};

/// Substitutes g(x_j) for every x_j and expands.
Polynomial apply_automorphism(const LinearAutomorphism& g, const Polynomial& p);

/// Minimal generators of the Stanley–Reisner ideal over the variable set
/// `universe` (a superset of the complex's vertex labels). Universe vertices
/// absent from the complex contribute their degree-one monomial.
std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& complex,
                                                 const std::vector<std::string>& universe);
std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& complex);

struct DegreePiece {
  std::vector<Monomial> leading;   ///< In(I)_i, revlex-descending
  std::vector<Monomial> standard;  ///< monomials of degree i outside In(I), revlex-descending
};

/// Degree-i part of the revlex initial ideal of the ideal generated by the
/// homogeneous polynomials `generators` (all of degree <= i are used).
///
/// Monomial generators are handled directly: every degree-i monomial they
/// divide is leading, and their columns are removed from the Macaulay matrix.
/// The remaining rows m*f are row-reduced exactly; pivot columns are leading.
/// With `want_leading` false only the standard monomials are returned.
DegreePiece initial_ideal_by_degree(const std::vector<Polynomial>& generators, const TermOrder& order, int degree,
                                    bool want_leading = true);

/// Divisibility-closed monomial set.
class Multicomplex {
 public:
  Multicomplex() = default;
  Multicomplex(std::size_t num_variables, std::vector<Monomial> monomials);

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool contains(const Monomial& m) const;
  bool contains_unit() const;
  bool is_divisibility_closed() const;
  bool is_squarefree() const;
  /// Union of the supports.
  VertexSet support() const;

 private:
  std::size_t num_variables_ = 0;
  std::vector<Monomial> monomials_;  // sorted by degree, then lexicographically on exponents
};

/// (F_0, F_1, ...): number of monomials of each degree.
std::vector<std::int64_t> f_vector_of_multicomplex(const Multicomplex& m);

/// B_g(Δ): the monomials outside In(gI_Δ + (T)) where T is the last d = dim Δ + 1
/// variables of `order`. Variables are indexed by position in `universe`.
///
/// Throws VerificationError if standard monomials survive in degree d + 1,
/// which happens exactly when T is not a system of parameters for k[X]/gI_Δ.
Multicomplex standard_monomial_basis(const SimplicialComplex& complex, const std::vector<std::string>& universe,
                                     const LinearAutomorphism& g, const TermOrder& order);

/// Monomial in the labels of `universe`, e.g. "a^2*b", or "1".
std::string format_monomial(const Monomial& m, const std::vector<std::string>& universe);

}  // namespace cmbal
