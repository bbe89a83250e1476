#include "kdirac/weights.hpp"

#include <cstdlib>
#include <sstream>

namespace kdirac {

namespace {

void check_rank(int k) {
  if (k < 1) throw InvalidParameter("rank parameter k must be >= 1, got " + std::to_string(k));
}

void check_same_k(const Weight& a, const Weight& b) {
  if (a.k() != b.k()) {
    throw InvalidParameter("mixing weights of different rank: k=" + std::to_string(a.k()) +
                           " vs k=" + std::to_string(b.k()));
  }
}

}  // namespace

Weight::Weight(int k, std::vector<Coord2> coords2) : k_(k), coords2_(std::move(coords2)) {
  check_rank(k_);
  if (static_cast<int>(coords2_.size()) != k_ + 2) {
    throw InvalidParameter("weight for k=" + std::to_string(k_) + " needs " +
                           std::to_string(k_ + 2) + " coordinates, got " +
                           std::to_string(coords2_.size()));
  }
}

Coord2 Weight::at2(int m) const {
  if (m < 1 || m > k_ + 2) {
    throw InvalidParameter("coordinate index " + std::to_string(m) + " out of range 1.." +
                           std::to_string(k_ + 2));
  }
  return coords2_[static_cast<std::size_t>(m - 1)];
}

bool Weight::is_integral() const {
  for (Coord2 c : coords2_)
    if (c % 2 != 0) return false;
  return true;
}

bool Weight::has_uniform_parity() const {
  for (Coord2 c : coords2_)
    if (((c % 2) + 2) % 2 != ((coords2_[0] % 2) + 2) % 2) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& rhs) {
  check_same_k(*this, rhs);
  for (std::size_t m = 0; m < coords2_.size(); ++m) coords2_[m] += rhs.coords2_[m];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  check_same_k(*this, rhs);
  for (std::size_t m = 0; m < coords2_.size(); ++m) coords2_[m] -= rhs.coords2_[m];
  return *this;
}

Weight delta(int k) {
  check_rank(k);
  std::vector<Coord2> c(static_cast<std::size_t>(k + 2));
  for (int m = 1; m <= k + 2; ++m) c[static_cast<std::size_t>(m - 1)] = 2 * (k + 2 - m);
  return Weight(k, std::move(c));
}

Weight fundamental_weight(int k, int m) {
  check_rank(k);
  if (m < 1 || m > k + 2) {
    throw InvalidParameter("fundamental weight index " + std::to_string(m) +
                           " out of range 1.." + std::to_string(k + 2));
  }
  std::vector<Coord2> c(static_cast<std::size_t>(k + 2), 0);
  if (m <= k) {
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = 2;
  } else {
    // Half-spin weights: all coordinates +-1/2.
    for (int i = 0; i < k + 2; ++i) c[static_cast<std::size_t>(i)] = 1;
    if (m == k + 1) c[static_cast<std::size_t>(k + 1)] = -1;
  }
  return Weight(k, std::move(c));
}

Weight root_vector(const RootLabel& r, int k) {
  check_rank(k);
  if (r.i < 1 || r.j <= r.i || r.j > k + 2) {
    throw InvalidParameter("root label indices (" + std::to_string(r.i) + "," +
                           std::to_string(r.j) + ") out of range for k=" + std::to_string(k));
  }
  std::vector<Coord2> c(static_cast<std::size_t>(k + 2), 0);
  c[static_cast<std::size_t>(r.i - 1)] = 2;
  c[static_cast<std::size_t>(r.j - 1)] = (r.kind == RootKind::Alpha) ? -2 : 2;
  return Weight(k, std::move(c));
}

std::string coord2_half_str(Coord2 c2) {
  if (c2 % 2 == 0) return std::to_string(c2 / 2);
  return std::to_string(c2) + "/2";
}

namespace {

std::string fail_ge(const std::string& lhs_name, Coord2 lhs, const std::string& rhs_name,
                    Coord2 rhs) {
  std::ostringstream os;
  os << lhs_name << " >= " << rhs_name << " fails (" << coord2_half_str(lhs) << " < "
     << coord2_half_str(rhs) << ")";
  return os.str();
}

std::string lam(int m) { return "lambda_" + std::to_string(m); }

}  // namespace

std::optional<std::string> dominance_violation(const Weight& w, ParabolicMarking mark) {
  const int k = w.k();
  // <lambda, a_{m,m+1}^v> >= 0  <=>  lambda_m >= lambda_{m+1}.
  // <lambda, b_{k+1,k+2}^v> >= 0 <=>  lambda_{k+1} >= -lambda_{k+2}.
  // Crossed nodes per marking: P crosses a_{k,k+1}; Q crosses a_{k,k+1} and
  // a_{k+1,k+2}; R crosses a_{k+1,k+2}; G crosses nothing.
  const bool check_k_k1 = (mark == ParabolicMarking::G || mark == ParabolicMarking::R);
  const bool check_k1_k2 = (mark == ParabolicMarking::G || mark == ParabolicMarking::P);
  for (int m = 1; m < k; ++m) {
    if (w.at2(m) < w.at2(m + 1)) return fail_ge(lam(m), w.at2(m), lam(m + 1), w.at2(m + 1));
  }
  if (check_k_k1 && w.at2(k) < w.at2(k + 1))
    return fail_ge(lam(k), w.at2(k), lam(k + 1), w.at2(k + 1));
  if (check_k1_k2 && w.at2(k + 1) < w.at2(k + 2))
    return fail_ge(lam(k + 1), w.at2(k + 1), lam(k + 2), w.at2(k + 2));
  if (w.at2(k + 1) < -w.at2(k + 2))
    return fail_ge(lam(k + 1), w.at2(k + 1), "-" + lam(k + 2), -w.at2(k + 2));
  return std::nullopt;
}

bool is_dominant(const Weight& w, ParabolicMarking m) {
  return !dominance_violation(w, m).has_value();
}

void require_dominant(const Weight& w, ParabolicMarking m, const std::string& context) {
  if (auto v = dominance_violation(w, m)) throw DominanceViolation(context + ": " + *v);
}

Weight affine_swap_last_two(const Weight& w) {
  const int k = w.k();
  Weight shifted = w + delta(k);
  std::vector<Coord2> c = shifted.coords2();
  std::swap(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k + 1)]);
  Weight out(k, std::move(c));
  return out - delta(k);
}

}  // namespace kdirac
