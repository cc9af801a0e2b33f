/*
 * Copyright 2026 The fuzzdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fuzzdist/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzdist {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
  q.assign(num.size(), 0);
  r.clear();
  if (cmp_mag(num, den) < 0) {
    r = num;
    q.clear();
    return;
  }
  // Schoolbook binary long division; operand sizes in this project stay tiny.
  const std::size_t bits = num.size() * 32;
  for (std::size_t i = bits; i-- > 0;) {
    // r <<= 1
    std::uint32_t carry = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::uint32_t nxt = r[k] >> 31;
      r[k] = (r[k] << 1) | carry;
      carry = nxt;
    }
    if (carry) r.push_back(1);
    // bring down bit i of num
    if ((num[i / 32] >> (i % 32)) & 1u) {
      if (r.empty())
        r.push_back(1);
      else
        r[0] |= 1u;
    }
    if (cmp_mag(r, den) >= 0) {
      r = sub_mag(r, den);
      q[i / 32] |= (1u << (i % 32));
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    return out;
  }
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  if (c > 0) {
    out.sign_ = a.sign_;
    out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
  } else {
    out.sign_ = b.sign_;
    out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
  }
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.sign_ == 0 || b.sign_ == 0) return out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return out;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
  if (den.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(num.mag_, den.mag_, qm, rm);
  q = BigInt();
  r = BigInt();
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : num.sign_ * den.sign_;
  r.sign_ = r.mag_.empty() ? 0 : num.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = y;
    y = r.abs();
  }
  return x;
}

BigInt BigInt::pow10(unsigned k) {
  BigInt out(1);
  BigInt ten(10);
  for (unsigned i = 0; i < k; ++i) out = out * ten;
  return out;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  return a.sign_ * cmp_mag(a.mag_, b.mag_);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> m = mag_;
  std::string digits;
  // repeated division by 10^9
  while (!m.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<BigInt> BigInt::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int sign = 1;
  std::size_t pos = 0;
  if (s[0] == '-') {
    sign = -1;
    pos = 1;
  }
  if (pos == s.size()) return std::nullopt;
  BigInt out;
  BigInt ten(10);
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c < '0' || c > '9') return std::nullopt;
    out = out * ten + BigInt(c - '0');
  }
  if (sign < 0) out = -out;
  return out;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  std::uint64_t v = 0;
  if (!mag_.empty()) v = mag_[0];
  if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return -static_cast<long long>(v);
  return static_cast<long long>(v);
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -v : v;
}

// ---------------------------------------------------------------------------

Rational::Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  if (den_.sign() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = out.num_.abs();
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.sign() < 0) q = q - BigInt(1);
  return q;
}

std::string Rational::to_fraction_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string() const {
  // strip the 2s and 5s out of the denominator
  BigInt d = den_;
  unsigned twos = 0, fives = 0;
  BigInt two(2), five(5), q, r;
  while (true) {
    BigInt::divmod(d, two, q, r);
    if (!r.is_zero()) break;
    d = q;
    ++twos;
  }
  while (true) {
    BigInt::divmod(d, five, q, r);
    if (!r.is_zero()) break;
    d = q;
    ++fives;
  }
  if (!d.is_one()) return to_fraction_string();
  unsigned k = std::max(twos, fives);
  // num / den == num * 2^(k-twos) * 5^(k-fives) / 10^k
  BigInt scaled = num_.abs();
  for (unsigned i = twos; i < k; ++i) scaled = scaled * two;
  for (unsigned i = fives; i < k; ++i) scaled = scaled * five;
  std::string digits = scaled.to_string();
  std::string out = num_.sign() < 0 ? "-" : "";
  if (k == 0) return out + digits;
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return out + digits;
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto p = BigInt::parse(s.substr(0, slash));
    auto q = BigInt::parse(s.substr(slash + 1));
    if (!p || !q || q->is_zero() || q->sign() < 0) return std::nullopt;
    return Rational(*p, *q);
  }
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) {
    auto p = BigInt::parse(s);
    if (!p) return std::nullopt;
    return Rational(*p, BigInt(1));
  }
  std::string_view head = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if (frac.empty()) return std::nullopt;
  bool neg = !head.empty() && head[0] == '-';
  if (neg) head = head.substr(1);
  if (head.empty()) head = "0";
  auto ip = BigInt::parse(head);
  auto fp = BigInt::parse(frac);
  if (!ip || !fp || ip->sign() < 0 || fp->sign() < 0) return std::nullopt;
  BigInt scale = BigInt::pow10(static_cast<unsigned>(frac.size()));
  BigInt num = *ip * scale + *fp;
  if (neg) num = -num;
  return Rational(num, scale);
}

}  // namespace fuzzdist
