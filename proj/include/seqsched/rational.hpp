#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqsched {

// Exact rational number with 64-bit numerator and denominator.
//
// Intermediate products are formed in 128 bits and reduced before being
// narrowed; a result that does not fit raises std::overflow_error instead of
// wrapping. The value is always kept in lowest terms with a positive
// denominator, so equality is structural.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT implicit
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "a" for integers, "a/b" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts "a", "a/b" and plain decimals such as "-0.125"; decimals are
  // converted exactly. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                         static_cast<__int128>(b.num_) * (a.den_ / g);
    const __int128 den = static_cast<__int128>(a.den_) * (b.den_ / g);
    return from_wide(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so the 128-bit product stays small.
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t d1 = g1 == 0 ? 1 : g1;
    const std::int64_t d2 = g2 == 0 ? 1 : g2;
    const __int128 num =
        static_cast<__int128>(a.num_ / d1) * static_cast<__int128>(b.num_ / d2);
    const __int128 den =
        static_cast<__int128>(a.den_ / d2) * static_cast<__int128>(b.den_ / d1);
    return from_wide(num, den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * b.reciprocal();
  }
  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return num_ < 0 ? Rational(-den_, -num_) : Rational(den_, num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=>
           static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    constexpr __int128 lo = INT64_MIN + 1;  // keep negation safe
    constexpr __int128 hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) {
      throw std::overflow_error("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  };
  auto parse_int = [&](std::string_view digits) -> std::int64_t {
    if (digits.empty()) fail();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec == std::errc::result_out_of_range) {
      throw std::overflow_error("rational literal out of range '" +
                                std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail();
    return v;
  };
  auto all_digits = [](std::string_view s) {
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  if (text.empty()) return fail();
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.front() == '-' || body.front() == '+') fail();

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto top = body.substr(0, slash);
    const auto bottom = body.substr(slash + 1);
    if (!all_digits(top) || !all_digits(bottom)) fail();
    const std::int64_t d = parse_int(bottom);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_int(top), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) ||
        !all_digits(frac) || frac.size() > 18) {
      fail();
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(whole.empty() ? 0 : parse_int(whole)) +
            Rational(frac.empty() ? 0 : parse_int(frac), scale);
  } else {
    if (!all_digits(body)) fail();
    value = Rational(parse_int(body));
  }
  return negative ? -value : value;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Exact value followed by a 6-significant-digit approximation,
// e.g. "387/100 (3.87)".
inline std::string with_approx(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
  return r.to_string() + " (" + buf + ")";
}

}  // namespace seqsched

template <>
struct std::hash<seqsched::Rational> {
  std::size_t operator()(const seqsched::Rational& r) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(r.num());
    const auto h2 = std::hash<std::int64_t>{}(r.den());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
