#include "tmap/scalar.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace tmap {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw DomainError("cannot parse rational '" + std::string(text) + "'");
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto whole = s.substr(0, dot);
      auto frac = s.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        bad(text);
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(s)) bad(text);
      digits = std::string(s);
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  }
  q.canonicalize();
  if (negative) q = -q;
  return Scalar(std::move(q));
}

namespace {

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 m = negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  mpz_class out(static_cast<unsigned long>(m >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(m & 0xffffffffffffffffULL);
  if (negative) out = -out;
  return out;
}

}  // namespace

void Scalar::set_big(__int128 num, __int128 den) {
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign(std::move(q));
}

void Scalar::assign(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

void Scalar::add_big(const Scalar& o, bool subtract) {
  mpq_class q = to_mpq();
  if (subtract) q -= o.to_mpq();
  else q += o.to_mpq();
  assign(std::move(q));
}

void Scalar::mul_big(const Scalar& o) {
  mpq_class q = to_mpq();
  q *= o.to_mpq();
  assign(std::move(q));
}

int Scalar::compare_big(const Scalar& a, const Scalar& b) {
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return (c > 0) - (c < 0);
}

std::string Scalar::numerator() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }

std::string Scalar::denominator() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Scalar::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

double Scalar::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

mpz_class Scalar::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return mpz_class(static_cast<long>(q));
  }
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return r;
}

mpz_class Scalar::ceil() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return mpz_class(static_cast<long>(q));
  }
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("Scalar: division by zero");
  if (!big_ && !o.big_) {
    const std::int64_t s = o.num_ < 0 ? -1 : 1;
    mul_small(s * o.den_, s * o.num_);
    return *this;
  }
  mpq_class q = to_mpq();
  q /= o.to_mpq();
  assign(std::move(q));
  return *this;
}

Scalar dyadic(unsigned k) {
  if (k < 62) return Scalar(1, std::int64_t{1} << k);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Scalar(mpq_class(mpz_class(1), den));
}

Scalar largest_dyadic_below(const Scalar& bound) {
  if (bound.sign() <= 0) throw DomainError("largest_dyadic_below: bound must be positive");
  Scalar t(1);
  const Scalar half(1, 2);
  while (!(t < bound)) {
    t *= half;
  }
  return t;
}

}  // namespace tmap
