#include "qseries/laurent_series.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace overrank::qseries {

namespace {

const Coefficient& zero_coefficient() {
  static const Coefficient kZero(0);
  return kZero;
}

Exponent floor_div(Exponent a, Exponent b) {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Exponent ceil_div(Exponent a, Exponent b) { return -floor_div(-a, b); }

}  // namespace

LaurentSeries::LaurentSeries(Exponent min_exp, std::vector<Coefficient> coeffs, Exponent order)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), order_(order) {
  // GMP arithmetic assumes reduced fractions; callers may pass e.g. 2/2.
  for (Coefficient& c : coeffs_) c.canonicalize();
  canonicalize();
}

void LaurentSeries::canonicalize() {
  if (min_exp_ >= order_) {
    coeffs_.clear();
    min_exp_ = order_;
    return;
  }
  const auto known = static_cast<std::size_t>(order_ - min_exp_);
  if (coeffs_.size() > known) coeffs_.resize(known);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c != 0; });
  const auto lead = static_cast<Exponent>(first - coeffs_.begin());
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    min_exp_ += lead;
  }
  if (coeffs_.empty()) min_exp_ = order_;
}

LaurentSeries LaurentSeries::zero(Exponent order) { return LaurentSeries(order, {}, order); }

LaurentSeries LaurentSeries::constant(const Coefficient& c, Exponent order) {
  return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const Coefficient& c, Exponent exp, Exponent order) {
  return LaurentSeries(exp, {c}, order);
}

Coefficient LaurentSeries::coeff(Exponent n) const {
  if (n >= order_) {
    throw Error(ErrorCode::BeyondTruncation,
                "coefficient of q^" + std::to_string(n) + " requested from a series known to order " +
                    std::to_string(order_));
  }
  return at(n);
}

const Coefficient& LaurentSeries::at(Exponent n) const noexcept {
  if (n < min_exp_ || n >= end_exp()) return zero_coefficient();
  return coeffs_[static_cast<std::size_t>(n - min_exp_)];
}

bool LaurentSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return is_integer(c); });
}

LaurentSeries LaurentSeries::truncated(Exponent order) const {
  if (order >= order_) return *this;
  LaurentSeries r = *this;
  r.order_ = order;
  r.canonicalize();
  return r;
}

LaurentSeries LaurentSeries::shifted(Exponent k) const {
  LaurentSeries r = *this;
  r.min_exp_ += k;
  r.order_ += k;
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  const Exponent order = std::min(order_, rhs.order_);
  if (rhs.is_zero()) {
    order_ = order;
    canonicalize();
    return *this;
  }
  const Exponent lo = std::min(min_exp_, rhs.min_exp_);
  const Exponent hi = std::min(order, std::max(end_exp(), rhs.end_exp()));
  if (lo >= hi) {
    *this = zero(order);
    return *this;
  }
  std::vector<Coefficient> out(static_cast<std::size_t>(hi - lo));
  for (Exponent n = min_exp_; n < std::min(end_exp(), hi); ++n) {
    out[static_cast<std::size_t>(n - lo)] = coeffs_[static_cast<std::size_t>(n - min_exp_)];
  }
  for (Exponent n = rhs.min_exp_; n < std::min(rhs.end_exp(), hi); ++n) {
    out[static_cast<std::size_t>(n - lo)] += rhs.coeffs_[static_cast<std::size_t>(n - rhs.min_exp_)];
  }
  min_exp_ = lo;
  coeffs_ = std::move(out);
  order_ = order;
  canonicalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) { return *this += -rhs; }

LaurentSeries& LaurentSeries::operator*=(const Coefficient& c) {
  if (c == 0) {
    coeffs_.clear();
    canonicalize();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const Exponent order = std::min(a.order_ + b.min_exp_, b.order_ + a.min_exp_);
  const Exponent lo = a.min_exp_ + b.min_exp_;
  if (a.is_zero() || b.is_zero() || lo >= order) return LaurentSeries::zero(order);

  const auto len = static_cast<std::size_t>(order - lo);
  const std::size_t na = std::min(a.coeffs_.size(), len);
  const std::size_t nb = std::min(b.coeffs_.size(), len);
  std::vector<Coefficient> out(std::min(len, na + nb - 1));

  if (a.all_integer() && b.all_integer()) {
    // Integer convolution avoids a gcd per term.
    std::vector<mpz_class> acc(out.size());
    for (std::size_t i = 0; i < na; ++i) {
      const mpz_class& x = a.coeffs_[i].get_num();
      if (x == 0) continue;
      const std::size_t jmax = std::min(nb, out.size() - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), x.get_mpz_t(), b.coeffs_[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = mpq_class(acc[k]);
  } else {
    Coefficient t;
    for (std::size_t i = 0; i < na; ++i) {
      if (a.coeffs_[i] == 0) continue;
      const std::size_t jmax = std::min(nb, out.size() - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
        out[i + j] += t;
      }
    }
  }
  return LaurentSeries(lo, std::move(out), order);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.order_ == b.order_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroLeadingTerm, "inverse of the zero series");
  const Exponent v = a.min_exp();
  const Exponent known = a.order() - v;
  const auto u = a.coefficients();
  const auto len = static_cast<std::size_t>(known);
  std::vector<Coefficient> b(len);
  const Coefficient inv0 = 1 / u[0];
  b[0] = inv0;
  Coefficient s, t;
  for (std::size_t k = 1; k < len; ++k) {
    s = 0;
    const std::size_t jmax = std::min(k, u.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (u[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), u[j].get_mpq_t(), b[k - j].get_mpq_t());
      s += t;
    }
    b[k] = -s * inv0;
  }
  return LaurentSeries(-v, std::move(b), known - v);
}

LaurentSeries substitute_power(const LaurentSeries& a, Exponent k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "substitute_power requires k >= 1");
  if (a.is_zero()) return LaurentSeries::zero(a.order() * k);
  const auto src = a.coefficients();
  std::vector<Coefficient> out((src.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < src.size(); ++i) out[i * static_cast<std::size_t>(k)] = src[i];
  return LaurentSeries(a.min_exp() * k, std::move(out), a.order() * k);
}

LaurentSeries extract_progression(const LaurentSeries& a, Exponent m, Exponent d) {
  if (m < 1 || d < 0 || d >= m) {
    throw Error(ErrorCode::InvalidArgument, "extract_progression requires m >= 1 and 0 <= d < m");
  }
  if (a.min_exp() < 0) {
    throw Error(ErrorCode::NegativeExponent, "extract_progression of a series with min_exp " +
                                                 std::to_string(a.min_exp()));
  }
  const Exponent order = ceil_div(a.order() - d, m);
  if (order <= 0) return LaurentSeries::zero(std::max<Exponent>(order, 0));
  std::vector<Coefficient> out(static_cast<std::size_t>(order));
  for (Exponent n = 0; n < order; ++n) out[static_cast<std::size_t>(n)] = a.at(m * n + d);
  return LaurentSeries(0, std::move(out), order);
}

Coefficient coeff(const LaurentSeries& a, Exponent n) { return a.coeff(n); }

LaurentSeries multiply_binomial(const LaurentSeries& a, int sign, Exponent e) {
  if (e == 0) return a * Coefficient(1 - sign);
  if (e < 0) return multiply_binomial(a, sign, -e).shifted(e) * Coefficient(-sign);
  if (a.is_zero()) return a;
  const Exponent end = std::min(a.order(), a.end_exp() + e);
  std::vector<Coefficient> out(static_cast<std::size_t>(end - a.min_exp()));
  const auto src = a.coefficients();
  for (std::size_t i = 0; i < src.size() && i < out.size(); ++i) out[i] = src[i];
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = 0; i + step < out.size() && i < src.size(); ++i) {
    if (sign > 0) {
      out[i + step] -= src[i];
    } else {
      out[i + step] += src[i];
    }
  }
  return LaurentSeries(a.min_exp(), std::move(out), a.order());
}

LaurentSeries divide_binomial(const LaurentSeries& a, int sign, Exponent e) {
  if (e == 0) {
    if (sign > 0) throw Error(ErrorCode::PoleHit, "division by 1 - q^0");
    return a * Coefficient(1, 2);
  }
  if (e < 0) return divide_binomial(a, sign, -e).shifted(-e) * Coefficient(-sign);
  if (a.is_zero()) return a;
  std::vector<Coefficient> out(static_cast<std::size_t>(a.order() - a.min_exp()));
  const auto src = a.coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[i];
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = step; i < out.size(); ++i) {
    if (out[i - step] == 0) continue;
    if (sign > 0) {
      out[i] += out[i - step];
    } else {
      out[i] -= out[i - step];
    }
  }
  return LaurentSeries(a.min_exp(), std::move(out), a.order());
}

void require_power_series(const LaurentSeries& a, const char* what) {
  if (a.min_exp() < 0) {
    throw Error(ErrorCode::NotPowerSeries,
                std::string(what) + " has a term q^" + std::to_string(a.min_exp()));
  }
}

}  // namespace overrank::qseries
