#pragma once

// Polynomials on the probability simplex in Bernstein form.

#include <functional>
#include <span>
#include <vector>

#include "credal/gambles.hpp"

namespace credal {

/// A probability mass function theta over the categories.
class SimplexPoint {
public:
  /// Throws ValidationError on negative coordinates or a sum other than 1.
  SimplexPoint(CategorySpace space, std::vector<Rational> coords);
  static SimplexPoint vertex(CategorySpace space, std::size_t category);

  const CategorySpace& space() const noexcept { return space_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t category) const { return coords_.at(category); }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

private:
  CategorySpace space_;
  std::vector<Rational> coords_;
};

/// Exact power by non-negative integer exponent.
Rational power(const Rational& base, unsigned exponent);

/// B_m(theta) = nu(m) prod_x theta_x^{m_x}.
Rational basis_eval(const CountVector& m, const SimplexPoint& theta);
Rational basis_eval(std::span<const unsigned> counts, const SimplexPoint& theta);

/// Polynomial of explicit degree n given by its coefficients over N^n.
class BernsteinPoly {
public:
  explicit BernsteinPoly(Gamble coefficients);
  static BernsteinPoly constant(CategorySpace space, unsigned degree, const Rational& c);

  const CategorySpace& space() const noexcept { return coeffs_.domain().space(); }
  unsigned degree() const noexcept { return coeffs_.domain().length(); }
  const Gamble& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(std::span<const unsigned> counts) const;

  BernsteinPoly operator+(const BernsteinPoly& other) const;
  BernsteinPoly operator*(const Rational& scale) const;

  /// Polynomial equality: both sides elevated to the larger degree.
  friend bool operator==(const BernsteinPoly& a, const BernsteinPoly& b);

private:
  Gamble coeffs_;
};

/// sum_m coeffs(m) B_m(theta).
Rational eval(const BernsteinPoly& p, const SimplexPoint& theta);

/// Count-multinomial prevision of a gamble on N^n at chance theta.
Rational comn(const Gamble& g, const SimplexPoint& theta);

/// Multinomial (i.i.d.) prevision of a gamble on X^n at chance theta.
Rational mn(const Gamble& f, const SimplexPoint& theta);

/// Degree elevation by k; the polynomial is unchanged.
BernsteinPoly elevate(const BernsteinPoly& p, unsigned k);
BernsteinPoly elevate_to(const BernsteinPoly& p, unsigned degree);

struct MonomialTerm {
  std::vector<unsigned> exponents;  // aligned with the category space
  Rational coefficient;

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// sum_i c_i theta^{alpha_i}. On the simplex each term is read as homogenized to
/// a common degree n by the factor (sum_x theta_x)^{n - |alpha_i|}.
class MonomialForm {
public:
  MonomialForm(CategorySpace space, std::vector<MonomialTerm> terms);

  const CategorySpace& space() const noexcept { return space_; }
  const std::vector<MonomialTerm>& terms() const noexcept { return terms_; }
  unsigned total_degree() const noexcept;
  /// Direct evaluation; agrees with the homogenized form since sum theta = 1.
  Rational evaluate(const SimplexPoint& theta) const;

  friend bool operator==(const MonomialForm&, const MonomialForm&) = default;

private:
  CategorySpace space_;
  std::vector<MonomialTerm> terms_;
};

/// Exact Bernstein coefficients at degree n >= total degree, else DegreeError.
BernsteinPoly from_monomials(const MonomialForm& q, unsigned degree);

struct Enclosure {
  Rational lower;
  Rational upper;
};

/// [min coefficient, max coefficient]: contains p(Sigma).
Enclosure bounds(const BernsteinPoly& p);

using SimplexFunction = std::function<Rational(const SimplexPoint&)>;

/// Degree-n Bernstein polynomial with coefficients h(m / n).
BernsteinPoly bernstein_approximant(const SimplexFunction& h, const CategorySpace& space,
                                    unsigned degree);

/// The rational grid {m / resolution : m in N^resolution} on the simplex.
std::vector<SimplexPoint> simplex_grid(const CategorySpace& space, unsigned resolution);

/// max over the grid of |eval(p, theta) - h(theta)|.
Rational grid_gap(const BernsteinPoly& p, const SimplexFunction& h,
                  std::span<const SimplexPoint> grid);

}  // namespace credal
