#include "tropcram/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcram {

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  unsigned long long m = neg_ ? -static_cast<unsigned long long>(v)
                              : static_cast<unsigned long long>(v);
  while (m) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.neg_ == b.neg_) {
    r.neg_ = a.neg_;
    r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
  } else {
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.neg_ = a.neg_;
      r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
    } else {
      r.neg_ = b.neg_;
      r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.neg_ = a.neg_ != b.neg_;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.limbs_.size() || carry; ++j) {
      uint64_t cur = r.limbs_[i + j] + carry;
      if (j < b.limbs_.size())
        cur += static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j];
      r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
  }
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  // Schoolbook binary long division on magnitudes.
  q = BigInt();
  r = BigInt();
  int bits = static_cast<int>(a.limbs_.size()) * 32;
  for (int i = bits - 1; i >= 0; --i) {
    // r = r*2 + bit_i(a)
    r = r + r;
    uint32_t bit = (a.limbs_[i / 32] >> (i % 32)) & 1u;
    if (bit) r = r + BigInt(1);
    if (cmp_mag(r.limbs_, b.limbs_) >= 0) {
      r.limbs_ = sub_mag(r.limbs_, b.limbs_);
      r.trim();
      int limb = i / 32;
      if (static_cast<size_t>(limb) >= q.limbs_.size()) q.limbs_.resize(limb + 1, 0);
      q.limbs_[limb] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
  q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
  r.neg_ = !r.is_zero() && a.neg_;
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

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
  int c = cmp_mag(a.limbs_, b.limbs_);
  return a.neg_ ? -c : c;
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (neg && !r.is_zero()) r.neg_ = true;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string digits;
  BigInt cur = *this;
  cur.neg_ = false;
  BigInt ten(10);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    cur = q;
  }
  if (neg_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

int Rat::cmp(const Rat& a, const Rat& b) {
  return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rat::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rat(BigInt::from_string(s.substr(0, slash)),
               BigInt::from_string(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("Rat: bad decimal '" + s + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    BigInt den(1), ten(10);
    for (size_t i = 0; i < frac.size(); ++i) den = den * ten;
    BigInt num = BigInt::from_string(whole);
    bool wneg = num.is_negative() || neg;
    if (num.is_negative()) num = -num;
    num = num * den + BigInt::from_string(frac);
    if (wneg) num = -num;
    return Rat(num, den);
  }
  return Rat(BigInt::from_string(s), BigInt(1));
}

Rat Rat::mod(const Rat& r, const Rat& m) {
  // r - floor(r/m)*m with m > 0.
  Rat q = r / m;
  BigInt fq, rem;
  BigInt::divmod(q.num(), q.den(), fq, rem);
  if (q.num().is_negative() && !rem.is_zero()) fq = fq - BigInt(1);
  Rat out = r - Rat(fq, BigInt(1)) * m;
  return out;
}

}  // namespace tropcram
