#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "tmap/errors.hpp"

namespace tmap {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// combined with 128-bit intermediates; anything larger moves to a GMP rational.
/// Every numeric quantity of the library (abscissae, values, slopes,
/// tolerances) is a Scalar, so all predicates are decided exactly.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
      if (value > static_cast<std::uint64_t>(kLimit)) {
        assign(mpq_class(mpz_class(static_cast<unsigned long>(value))));
        return;
      }
    }
    num_ = static_cast<std::int64_t>(value);
    if (num_ == std::numeric_limits<std::int64_t>::min()) assign(mpq_class(mpz_class(static_cast<long>(value))));
  }

  template <std::integral I, std::integral J>
  Scalar(I num, J den) {
    if (den == 0) throw DomainError("Scalar: zero denominator");
    set(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  explicit Scalar(mpq_class q) {
    q.canonicalize();
    assign(std::move(q));
  }

  Scalar(const Scalar& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  /// Parses "p", "p/q", or a finite decimal such as "0.15" or "-2.5e-3".
  static Scalar parse(std::string_view text);

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] std::string numerator() const;
  [[nodiscard]] std::string denominator() const;

  /// Largest integer not exceeding the value.
  [[nodiscard]] mpz_class floor() const;
  /// Smallest integer not below the value.
  [[nodiscard]] mpz_class ceil() const;

  Scalar& operator+=(const Scalar& o) {
    if (!big_ && !o.big_) add_small(o.num_, o.den_);
    else add_big(o, false);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    if (!big_ && !o.big_) add_small(-o.num_, o.den_);
    else add_big(o, true);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (!big_ && !o.big_) mul_small(o.num_, o.den_);
    else mul_big(o);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
  friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }
  friend Scalar operator-(Scalar a) {
    if (a.big_) *a.big_ = -*a.big_;
    else a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    // Canonical forms: a value that fits inline is never stored as a GMP rational.
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c;
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      c = (l > r) - (l < r);
    } else {
      c = compare_big(a, b);
    }
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max();

  static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
      b >>= __builtin_ctzll(b);
      if (a > b) std::swap(a, b);
      b -= a;
    } while (b != 0);
    return a << shift;
  }
  static std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  }
  static bool fits(__int128 v) { return v <= kLimit && v >= -kLimit; }

  // Stores num/den (den != 0) given as 128-bit integers, reducing as needed.
  void set(__int128 num, __int128 den) {
    if (den < 0) num = -num, den = -den;
    if (fits(num) && den <= kLimit) {
      const auto n = static_cast<std::int64_t>(num);
      const auto g = static_cast<std::int64_t>(gcd(magnitude(n), static_cast<std::uint64_t>(den)));
      num_ = n / g;
      den_ = static_cast<std::int64_t>(den) / g;
      big_.reset();
    } else {
      set_big(num, den);
    }
  }
  // Stores an already reduced num/den with den > 0.
  void set_reduced(__int128 num, __int128 den) {
    if (fits(num) && den <= kLimit) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      big_.reset();
    } else {
      set_big(num, den);
    }
  }
  void set_big(__int128 num, __int128 den);

  void add_small(std::int64_t on, std::int64_t od) {
    if (on == 0) return;
    if (num_ == 0) {
      num_ = on;
      den_ = od;
      return;
    }
    if (den_ == od) {
      const __int128 n = static_cast<__int128>(num_) + on;
      if (den_ == 1) {
        set_reduced(n, 1);
        return;
      }
      const std::uint64_t g = gcd(static_cast<std::uint64_t>(n < 0 ? -n : n) % static_cast<std::uint64_t>(den_),
                                  static_cast<std::uint64_t>(den_));
      set_reduced(n / static_cast<__int128>(g), den_ / static_cast<std::int64_t>(g));
      return;
    }
    const auto d1 = static_cast<std::int64_t>(gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(od)));
    const std::int64_t a = den_ / d1, b = od / d1;
    const __int128 t = static_cast<__int128>(num_) * b + static_cast<__int128>(on) * a;
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    if (d1 == 1) {
      set_reduced(t, static_cast<__int128>(den_) * od);
      return;
    }
    const __int128 tm = t < 0 ? -t : t;
    const auto d2 = static_cast<std::int64_t>(gcd(static_cast<std::uint64_t>(tm % d1), static_cast<std::uint64_t>(d1)));
    set_reduced(t / d2, static_cast<__int128>(a) * (od / d2));
  }

  void mul_small(std::int64_t on, std::int64_t od) {
    if (num_ == 0 || on == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    const auto g1 = static_cast<std::int64_t>(gcd(magnitude(num_), static_cast<std::uint64_t>(od)));
    const auto g2 = static_cast<std::int64_t>(gcd(magnitude(on), static_cast<std::uint64_t>(den_)));
    set_reduced(static_cast<__int128>(num_ / g1) * (on / g2), static_cast<__int128>(den_ / g2) * (od / g1));
  }

  void assign(mpq_class q);
  void add_big(const Scalar& o, bool subtract);
  void mul_big(const Scalar& o);
  static int compare_big(const Scalar& a, const Scalar& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// 2^-k as an exact rational.
Scalar dyadic(unsigned k);

/// Largest power of two 2^-k (k >= 0) that is strictly below `bound`; bound must be positive.
Scalar largest_dyadic_below(const Scalar& bound);

}  // namespace tmap
