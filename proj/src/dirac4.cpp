#include "kdirac/dirac4.hpp"

#include <numeric>
#include <sstream>

namespace kdirac {

namespace {

using Wide = __int128;

constexpr Wide kMax64 = Wide(INT64_MAX);

Wide wabs(Wide x) { return x < 0 ? -x : x; }

Wide wgcd(Wide a, Wide b) {
  a = wabs(a);
  b = wabs(b);
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t narrow(Wide x, const char* what) {
  if (x > kMax64 || x < -kMax64) {
    throw StructuralError(std::string(what) + ": rational overflow past 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InvalidParameter("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

namespace {

// Builds a reduced rational from 128-bit numerator/denominator.
Rational make_reduced(Wide n, Wide d, const char* what) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Wide g = wgcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n, what), narrow(d, what));
}

}  // namespace

Rational& Rational::operator+=(const Rational& r) {
  *this = make_reduced(Wide(num_) * r.den_ + Wide(r.num_) * den_, Wide(den_) * r.den_, "add");
  return *this;
}

Rational& Rational::operator-=(const Rational& r) {
  *this = make_reduced(Wide(num_) * r.den_ - Wide(r.num_) * den_, Wide(den_) * r.den_, "sub");
  return *this;
}

Rational& Rational::operator*=(const Rational& r) {
  *this = make_reduced(Wide(num_) * r.num_, Wide(den_) * r.den_, "mul");
  return *this;
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw InvalidParameter("rational division by zero");
  *this = make_reduced(Wide(num_) * r.den_, Wide(den_) * r.num_, "div");
  return *this;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& z) {
  re += z.re;
  im += z.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& z) {
  re -= z.re;
  im -= z.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& z) {
  const Rational nre = re * z.re - im * z.im;
  const Rational nim = re * z.im + im * z.re;
  re = nre;
  im = nim;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::ostringstream os;
  if (!re.is_zero()) os << re.str();
  if (im == Rational(1)) {
    os << (re.is_zero() ? "i" : "+i");
  } else if (im == Rational(-1)) {
    os << "-i";
  } else {
    if (!re.is_zero() && !(im.num() < 0)) os << "+";
    os << im.str() << "i";
  }
  return os.str();
}

bool spinor_is_zero(const Spinor& s) { return s[0].is_zero() && s[1].is_zero(); }

Spinor spinor_add(const Spinor& x, const Spinor& y) { return {x[0] + y[0], x[1] + y[1]}; }

Spinor spinor_scale(const GaussianRational& c, const Spinor& s) { return {c * s[0], c * s[1]}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 mat_add(const Mat2& x, const Mat2& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

Mat2 mat_neg(const Mat2& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

Spinor mat_apply(const Mat2& m, const Spinor& s) {
  return {m[0] * s[0] + m[1] * s[1], m[2] * s[0] + m[3] * s[1]};
}

const CliffordBasis& CliffordBasis::standard() {
  static const CliffordBasis basis = [] {
    const Rational z = 0, one = 1;
    const GaussianRational c0{z, z}, c1{one, z}, ci{z, one};
    CliffordBasis b;
    b.e[0] = {c1, c0, c0, c1};
    b.e[1] = {ci, c0, c0, -ci};
    b.e[2] = {c0, c1, -c1, c0};
    b.e[3] = {c0, ci, ci, c0};
    b.ebar[0] = b.e[0];
    for (int a = 1; a < 4; ++a) b.ebar[static_cast<std::size_t>(a)] = mat_neg(b.e[static_cast<std::size_t>(a)]);
    return b;
  }();
  return basis;
}

int Monomial::degree() const {
  int d = 0;
  for (std::uint8_t e : exp) d += e;
  return d;
}

PolySpinorField::PolySpinorField(int k, int max_degree) : k_(k), max_degree_(max_degree) {
  if (k_ < 1) throw InvalidParameter("field needs k >= 1, got " + std::to_string(k_));
  if (max_degree_ < 0) throw InvalidParameter("field max_degree must be >= 0");
}

void PolySpinorField::add_term(const Monomial& mono, const Spinor& c) {
  if (static_cast<int>(mono.exp.size()) != vars()) {
    throw InvalidParameter("monomial over " + std::to_string(mono.exp.size()) +
                           " variables added to a field over " + std::to_string(vars()));
  }
  if (mono.degree() > max_degree_) {
    throw InvalidParameter("monomial degree " + std::to_string(mono.degree()) +
                           " exceeds the declared maximum " + std::to_string(max_degree_));
  }
  if (spinor_is_zero(c)) return;
  auto [it, fresh] = terms_.try_emplace(mono, c);
  if (!fresh) {
    it->second = spinor_add(it->second, c);
    if (spinor_is_zero(it->second)) terms_.erase(it);
  }
}

PolySpinorField& PolySpinorField::operator+=(const PolySpinorField& g) {
  if (g.k_ != k_) throw InvalidParameter("adding fields of different k");
  for (const auto& [mono, c] : g.terms_) add_term(mono, c);
  return *this;
}

PolySpinorField derivative(const PolySpinorField& f, int var) {
  if (var < 0 || var >= f.vars()) {
    throw InvalidParameter("derivative variable " + std::to_string(var) + " out of range 0.." +
                           std::to_string(f.vars() - 1));
  }
  PolySpinorField out(f.k(), f.max_degree());
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [mono, c] : f.terms()) {
    const int e = mono.exp[v];
    if (e == 0) continue;
    Monomial m = mono;
    m.exp[v] = static_cast<std::uint8_t>(e - 1);
    out.add_term(m, spinor_scale(GaussianRational{Rational(e), Rational(0)}, c));
  }
  return out;
}

namespace {

void check_block(const PolySpinorField& f, int l) {
  if (l < 1 || l > f.k()) {
    throw InvalidParameter("variable block " + std::to_string(l) + " out of range 1.." +
                           std::to_string(f.k()));
  }
}

}  // namespace

PolySpinorField dirac_component(const PolySpinorField& f, int l) {
  check_block(f, l);
  const CliffordBasis& cb = CliffordBasis::standard();
  PolySpinorField out(f.k(), f.max_degree());
  for (int a = 0; a < 4; ++a) {
    const PolySpinorField df = derivative(f, 4 * (l - 1) + a);
    for (const auto& [mono, c] : df.terms()) {
      out.add_term(mono, mat_apply(cb.e[static_cast<std::size_t>(a)], c));
    }
  }
  return out;
}

PolySpinorField conjugate_dirac_component(const PolySpinorField& f, int l) {
  check_block(f, l);
  const CliffordBasis& cb = CliffordBasis::standard();
  PolySpinorField out(f.k(), f.max_degree());
  for (int a = 0; a < 4; ++a) {
    const PolySpinorField df = derivative(f, 4 * (l - 1) + a);
    for (const auto& [mono, c] : df.terms()) {
      out.add_term(mono, mat_apply(cb.ebar[static_cast<std::size_t>(a)], c));
    }
  }
  return out;
}

PolySpinorField laplacian_component(const PolySpinorField& f, int l) {
  check_block(f, l);
  // Second derivatives directly on the monomials: e(e-1) x^(e-2); no
  // Clifford matrices and no composition of first-order operators here.
  PolySpinorField out(f.k(), f.max_degree());
  for (int a = 0; a < 4; ++a) {
    const auto v = static_cast<std::size_t>(4 * (l - 1) + a);
    for (const auto& [mono, c] : f.terms()) {
      const int e = mono.exp[v];
      if (e < 2) continue;
      Monomial m = mono;
      m.exp[v] = static_cast<std::uint8_t>(e - 2);
      out.add_term(m, spinor_scale(GaussianRational{Rational(std::int64_t(e) * (e - 1)), 0}, c));
    }
  }
  return out;
}

PolySpinorField mixed_laplacian(const PolySpinorField& f, int l, int m) {
  check_block(f, l);
  check_block(f, m);
  if (l == m) return laplacian_component(f, l);
  // Distinct blocks: the coefficient of the polarized second derivative is
  // the plain product of the two exponents.  Still no Clifford matrices and
  // no composition of first-order operators.
  PolySpinorField out(f.k(), f.max_degree());
  for (int a = 0; a < 4; ++a) {
    const auto u = static_cast<std::size_t>(4 * (l - 1) + a);
    const auto w = static_cast<std::size_t>(4 * (m - 1) + a);
    for (const auto& [mono, c] : f.terms()) {
      const int eu = mono.exp[u];
      const int ew = mono.exp[w];
      if (eu < 1 || ew < 1) continue;
      Monomial t = mono;
      t.exp[u] = static_cast<std::uint8_t>(eu - 1);
      t.exp[w] = static_cast<std::uint8_t>(ew - 1);
      out.add_term(t, spinor_scale(GaussianRational{Rational(std::int64_t(eu) * ew), 0}, c));
    }
  }
  return out;
}

std::vector<PolySpinorField> dirac_k(const PolySpinorField& f) {
  std::vector<PolySpinorField> out;
  out.reserve(static_cast<std::size_t>(f.k()));
  for (int l = 1; l <= f.k(); ++l) out.push_back(dirac_component(f, l));
  return out;
}

PolySpinorField degree_one_monogenic(int k, int l, const Spinor& v) {
  PolySpinorField f(k, 1);
  check_block(f, l);
  const CliffordBasis& cb = CliffordBasis::standard();
  Monomial m0;
  m0.exp.assign(static_cast<std::size_t>(4 * k), 0);
  Monomial m1 = m0;
  m0.exp[static_cast<std::size_t>(4 * (l - 1))] = 1;      // x_{l,0}
  m1.exp[static_cast<std::size_t>(4 * (l - 1) + 1)] = 1;  // x_{l,1}
  f.add_term(m1, mat_apply(cb.e[0], v));
  f.add_term(m0, spinor_scale(GaussianRational{Rational(-1), 0}, mat_apply(cb.e[1], v)));
  return f;
}

namespace {

// splitmix64: tiny, portable, reproducible.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) { return splitmix64(state) % n; }

}  // namespace

PolySpinorField random_field(int k, int max_degree, int n_terms, std::uint64_t seed) {
  PolySpinorField f(k, max_degree);
  std::uint64_t state = seed;
  for (int t = 0; t < n_terms; ++t) {
    Monomial m;
    m.exp.assign(static_cast<std::size_t>(4 * k), 0);
    const int deg = static_cast<int>(bounded(state, static_cast<std::uint64_t>(max_degree + 1)));
    for (int d = 0; d < deg; ++d) {
      const auto v = static_cast<std::size_t>(bounded(state, static_cast<std::uint64_t>(4 * k)));
      ++m.exp[v];
    }
    Spinor c;
    for (auto& z : c) {
      z.re = Rational(static_cast<std::int64_t>(bounded(state, 7)) - 3);
      z.im = Rational(static_cast<std::int64_t>(bounded(state, 7)) - 3);
    }
    f.add_term(m, c);
  }
  return f;
}

std::int64_t dirac_target_dim(int k) {
  if (k < 1) throw InvalidParameter("dirac_target_dim needs k >= 1");
  return 2 * static_cast<std::int64_t>(k);
}

}  // namespace kdirac
