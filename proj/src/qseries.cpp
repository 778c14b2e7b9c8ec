#include "rankasym/qseries.hpp"

#include <algorithm>
#include <ostream>

#include "rankasym/errors.hpp"

namespace rankasym::qseries {

namespace {

const mpz_class& zero_coeff() {
  static const mpz_class z{0};
  return z;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.emplace(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

const mpz_class& LaurentPoly::operator[](int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? zero_coeff() : it->second;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1; }

int LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

mpz_class LaurentPoly::coefficient_sum() const {
  mpz_class total = 0;
  for (const auto& [e, c] : coeffs_) total += c;
  return total;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ':' + c.get_str();
  }
  return out;
}

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  terms_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries::BivariateSeries(int order, std::vector<LaurentPoly> terms) : BivariateSeries(order) {
  if (terms.size() > terms_.size()) throw DomainError("series terms exceed the truncation order");
  std::move(terms.begin(), terms.end(), terms_.begin());
}

BivariateSeries BivariateSeries::one(int order) {
  BivariateSeries s(order);
  s.terms_[0] = LaurentPoly(1);
  return s;
}

BivariateSeries BivariateSeries::from_q_coefficients(int order, const std::vector<long>& coeffs) {
  BivariateSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k) s.terms_[k] = LaurentPoly(coeffs[k]);
  return s;
}

const LaurentPoly& BivariateSeries::operator[](int n) const {
  if (n < 0 || n > order_) {
    throw DomainError("q^" + std::to_string(n) + " is beyond the truncation order " + std::to_string(order_));
  }
  return terms_[static_cast<std::size_t>(n)];
}

LaurentPoly& BivariateSeries::at(int n) {
  if (n < 0 || n > order_) {
    throw DomainError("q^" + std::to_string(n) + " is beyond the truncation order " + std::to_string(order_));
  }
  return terms_[static_cast<std::size_t>(n)];
}

BivariateSeries BivariateSeries::reflected() const {
  BivariateSeries out(order_);
  for (int n = 0; n <= order_; ++n) out.terms_[static_cast<std::size_t>(n)] = terms_[static_cast<std::size_t>(n)].reflected();
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  order_ = std::min(order_, other.order_);
  terms_.resize(static_cast<std::size_t>(order_) + 1);
  for (int n = 0; n <= order_; ++n) terms_[static_cast<std::size_t>(n)] += other.terms_[static_cast<std::size_t>(n)];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  order_ = std::min(order_, other.order_);
  terms_.resize(static_cast<std::size_t>(order_) + 1);
  for (int n = 0; n <= order_; ++n) terms_[static_cast<std::size_t>(n)] -= other.terms_[static_cast<std::size_t>(n)];
  return *this;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out = a;
  return out += b;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out = a;
  return out -= b;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) { return a.order_ == b.order_ && a.terms_ == b.terms_; }

void BivariateSeries::dump(std::ostream& out) const {
  for (int n = 0; n <= order_; ++n) {
    const auto body = terms_[static_cast<std::size_t>(n)].to_string();
    out << n << ':';
    if (!body.empty()) out << ' ' << body;
    out << '\n';
  }
}

BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order(), b.order());
  BivariateSeries out(order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a[i];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      const auto& bj = b[j];
      if (bj.is_zero()) continue;
      out.at(i + j) += ai * bj;
    }
  }
  return out;
}

BivariateSeries series_invert(const BivariateSeries& a) {
  if (!a[0].is_one()) {
    throw NotInvertible("not invertible as a power series: constant term is " +
                        (a[0].is_zero() ? std::string("0") : a[0].to_string()) + ", expected 0:1");
  }
  const int order = a.order();
  BivariateSeries b(order);
  b.at(0) = LaurentPoly(1);
  // b_n = -sum_{k=1}^{n} a_k b_{n-k}
  for (int n = 1; n <= order; ++n) {
    LaurentPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc -= a[k] * b[n - k];
    }
    b.at(n) = std::move(acc);
  }
  return b;
}

BivariateSeries q_pochhammer(int order) {
  // Factor by factor: multiplying by (1 - q^k) in place, high powers first.
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1, mpz_class(0));
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    for (int n = order; n >= k; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - k)];
  }
  BivariateSeries prod(order);
  for (int n = 0; n <= order; ++n) prod.at(n) = LaurentPoly::monomial(0, c[static_cast<std::size_t>(n)]);
  return prod;
}

BivariateSeries rank_generating_expansion(int order, int series_cap) {
  if (order < 0) throw DomainError("series order must be non-negative");
  if (order > series_cap) {
    throw CapExceeded("rank expansion order " + std::to_string(order) + " exceeds the series cap " +
                      std::to_string(series_cap));
  }
  // Bilateral sum. The k = 0 term (1 - zeta)/(1 - zeta) is exactly 1.
  // |k| <= K with K(3K-1)/2 > order suffices since higher terms start beyond q^order.
  BivariateSeries sum = BivariateSeries::one(order);
  const LaurentPoly one_minus_zeta = LaurentPoly(1) - LaurentPoly::monomial(1);
  const LaurentPoly one_minus_inv_zeta = LaurentPoly(1) - LaurentPoly::monomial(-1);
  for (int k = 1; k * (3 * k - 1) / 2 <= order; ++k) {
    const long sign = (k % 2 == 0) ? 1 : -1;
    // k > 0: (-1)^k q^{k(3k+1)/2} (1 - zeta) sum_j zeta^j q^{kj}
    const int pos_base = k * (3 * k + 1) / 2;
    for (int j = 0; pos_base + k * j <= order; ++j) {
      sum.at(pos_base + k * j) += LaurentPoly::monomial(j, sign) * one_minus_zeta;
    }
    // k = -l < 0: (-1)^l q^{l(3l+1)/2} (1 - zeta^{-1}) sum_j zeta^{-j} q^{lj}
    for (int j = 0; pos_base + k * j <= order; ++j) {
      sum.at(pos_base + k * j) += LaurentPoly::monomial(-j, sign) * one_minus_inv_zeta;
    }
  }
  return series_mul(series_invert(q_pochhammer(order)), sum);
}

}  // namespace rankasym::qseries
