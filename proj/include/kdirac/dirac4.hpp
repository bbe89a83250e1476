// Numeric (but exact) verification model for the first operator of the
// pushed-down complex: the Dirac operator in k variables in dimension 4.
//
// Model:
//   * k quaternionic-style variables, each with 4 real coordinates
//     x_{l,0..3}; flat variable index = 4*(l-1) + a.
//   * Spinors are C^2 columns with Gaussian-rational entries.
//   * The Clifford multiplication uses the standard 2x2 complex matrices
//       e_0 = I,  e_1 = [[i,0],[0,-i]],  e_2 = [[0,1],[-1,0]],
//       e_3 = [[0,i],[i,0]],
//     with conjugates eb_0 = e_0, eb_l = -e_l (l = 1..3), so that
//       e_a eb_b + e_b eb_a = 2 delta_ab I.
//   * Fields are spinor-valued polynomials: finitely many monomials mapping
//     to spinor coefficients, exponents stored per flat variable.
//   * Component Dirac operators  D_l f  = sum_a e_a  d f / d x_{l,a},
//     conjugates                 Db_l f = sum_a eb_a d f / d x_{l,a},
//     mixed Laplacians           Lap_lm f = sum_a d^2 f / (d x_{l,a} d x_{m,a})
//     (the Laplacians are computed directly from second derivatives, NOT as
//     compositions, so the factorization identity Db_l D_l = Lap_ll and its
//     polarization Db_l D_m + Db_m D_l = 2 Lap_lm are real cross-checks of
//     two independent code paths).  Note that D_l D_m != D_m D_l for l != m:
//     the derivative blocks are disjoint but the Clifford coefficients share
//     one matrix algebra, e.g. e_1 e_2 = -e_2 e_1; only the symmetrized
//     combination above collapses to a scalar operator.
//
// All arithmetic is exact: Rational is a reduced int64 fraction with 128-bit
// intermediates and overflow checks (StructuralError on overflow, never a
// wrong answer).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kdirac/errors.hpp"

namespace kdirac {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit int -> exact rational
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& r);
  Rational& operator-=(const Rational& r);
  Rational& operator*=(const Rational& r);
  Rational& operator/=(const Rational& r);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;  // "3", "-1/2"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& z);
  GaussianRational& operator-=(const GaussianRational& z);
  GaussianRational& operator*=(const GaussianRational& z);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;  // "1-1/2i"
};

using Spinor = std::array<GaussianRational, 2>;

bool spinor_is_zero(const Spinor& s);
Spinor spinor_add(const Spinor& x, const Spinor& y);
Spinor spinor_scale(const GaussianRational& c, const Spinor& s);

// Row-major 2x2 complex matrix.
using Mat2 = std::array<GaussianRational, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_add(const Mat2& x, const Mat2& y);
Mat2 mat_neg(const Mat2& x);
Spinor mat_apply(const Mat2& m, const Spinor& s);

struct CliffordBasis {
  std::array<Mat2, 4> e;     // e[0] = identity
  std::array<Mat2, 4> ebar;  // ebar[0] = e[0], ebar[a] = -e[a] otherwise

  static const CliffordBasis& standard();
};

// Exponent vector over the 4k flat variables.  Total degree capped by the
// owning field.
struct Monomial {
  std::vector<std::uint8_t> exp;

  int degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Finitely supported map monomial -> spinor.  Zero coefficients are never
// stored; two fields are equal iff their stored maps are equal.
class PolySpinorField {
 public:
  PolySpinorField(int k, int max_degree);

  int k() const { return k_; }
  int vars() const { return 4 * k_; }
  int max_degree() const { return max_degree_; }

  // Adds c to the coefficient of mono; erases the entry when it cancels.
  void add_term(const Monomial& mono, const Spinor& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Spinor>& terms() const { return terms_; }

  PolySpinorField& operator+=(const PolySpinorField& g);
  friend bool operator==(const PolySpinorField&, const PolySpinorField&) = default;

 private:
  int k_;
  int max_degree_;
  std::map<Monomial, Spinor> terms_;
};

// d f / d x(flat variable index v), exact.
PolySpinorField derivative(const PolySpinorField& f, int var);

// D_l f, Db_l f, Lap_l f for one variable block l = 1..k.
PolySpinorField dirac_component(const PolySpinorField& f, int l);
PolySpinorField conjugate_dirac_component(const PolySpinorField& f, int l);
PolySpinorField laplacian_component(const PolySpinorField& f, int l);

// The scalar polarization Lap_lm f = sum_a d^2 f / (d x_{l,a} d x_{m,a});
// mixed_laplacian(f, l, l) == laplacian_component(f, l).
PolySpinorField mixed_laplacian(const PolySpinorField& f, int l, int m);

// All k components D_1 f, ..., D_k f: the operator the complex starts with.
std::vector<PolySpinorField> dirac_k(const PolySpinorField& f);

// The classical degree-1 monogenic in block l with direction spinor v:
//   x_{l,1} e_0 v - x_{l,0} e_1 v,   annihilated by every D_m.
PolySpinorField degree_one_monogenic(int k, int l, const Spinor& v);

// Pseudorandom field with the given number of monomials of degree
// <= max_degree and small integer spinor coefficients.  Deterministic in the
// seed and portable (no library distributions involved).
PolySpinorField random_field(int k, int max_degree, int n_terms, std::uint64_t seed);

// Target fiber dimension of the first operator: dim(C^k tensor Sp_+) = 2k.
std::int64_t dirac_target_dim(int k);

}  // namespace kdirac
