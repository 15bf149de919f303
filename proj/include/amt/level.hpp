#pragma once

// Exact filtration levels: reduced rationals plus the two infinities.

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amt {

class LevelParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Level {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr Level() = default;
  constexpr Level(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)
  Level(std::int64_t num, std::int64_t den) { assign(num, den); }

  static constexpr Level neg_inf() { return Level(Kind::NegInf); }
  static constexpr Level pos_inf() { return Level(Kind::PosInf); }

  // Accepts "7", "-3/4", "2.125", "1e-2", "inf", "+inf", "-inf".
  static Level parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw LevelParseError("empty level");
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") return pos_inf();
    if (s == "-inf" || s == "-infinity") return neg_inf();
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      std::int64_t num = parse_int(s.substr(0, slash), text);
      std::int64_t den = parse_int(s.substr(slash + 1), text);
      if (den == 0) throw LevelParseError("zero denominator in level '" + std::string(text) + "'");
      return Level(num, den);
    }
    return parse_decimal(s, text);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      case Kind::Finite: break;
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const {
    switch (kind_) {
      case Kind::NegInf: return -1e300;
      case Kind::PosInf: return 1e300;
      case Kind::Finite: break;
    }
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend std::strong_ordering operator<=>(const Level& a, const Level& b) {
    if (a.kind_ != b.kind_ || !a.is_finite()) return a.kind_ <=> b.kind_;
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  friend bool operator==(const Level& a, const Level& b) {
    return a.kind_ == b.kind_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend Level operator+(const Level& a, const Level& b) {
    if (!a.is_finite() || !b.is_finite()) {
      if (a.is_finite()) return b;
      if (b.is_finite() || a.kind_ == b.kind_) return a;
      throw std::domain_error("inf + -inf is undefined");
    }
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(num, den);
  }
  friend Level operator-(const Level& a) {
    if (a.kind_ == Kind::NegInf) return pos_inf();
    if (a.kind_ == Kind::PosInf) return neg_inf();
    return Level(-a.num_, a.den_);
  }
  friend Level operator-(const Level& a, const Level& b) { return a + (-b); }

  // Midpoint of two finite levels.
  static Level midpoint(const Level& a, const Level& b) {
    if (!a.is_finite() || !b.is_finite()) throw std::domain_error("midpoint of infinite level");
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_ * 2;
    return from_wide(num, den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Level& l) { return os << l.to_string(); }

 private:
  constexpr explicit Level(Kind k) : kind_(k) {}

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    *this = from_wide(num, den);
  }

  static Level from_wide(__int128 num, __int128 den) {
    if (den < 0) num = -num, den = -den;
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) num /= a, den /= a;
    constexpr __int128 lo = INT64_MIN + 1, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("level does not fit in 64-bit rational");
    Level l;
    l.num_ = static_cast<std::int64_t>(num);
    l.den_ = static_cast<std::int64_t>(den);
    return l;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

  static std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw LevelParseError("malformed number '" + std::string(whole) + "'");
    return v;
  }

  static Level parse_decimal(std::string_view s, std::string_view whole) {
    auto bad = [&] { return LevelParseError("malformed number '" + std::string(whole) + "'"); };
    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      exponent = parse_int(s.substr(e + 1), whole);
      s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    __int128 num = 0;
    std::int64_t scale = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : s) {
      if (c == '.') {
        if (seen_dot) throw bad();
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_dot) ++scale;
        if (num > static_cast<__int128>(INT64_MAX) * 1000) throw bad();
      } else {
        throw bad();
      }
    }
    if (!seen_digit) throw bad();
    exponent -= scale;
    if (exponent > 18 || exponent < -18) throw bad();
    __int128 den = 1;
    for (; exponent > 0; --exponent) num *= 10;
    for (; exponent < 0; ++exponent) den *= 10;
    if (negative) num = -num;
    try {
      return from_wide(num, den);
    } catch (const std::overflow_error&) {
      throw bad();
    }
  }

  Kind kind_ = Kind::Finite;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace amt
