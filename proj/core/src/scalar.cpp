#include "laxalg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "laxalg/errors.hpp"

namespace lax {

namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    // U+2212 MINUS SIGN in UTF-8
    if (k + 2 < text.size() + 0 && static_cast<unsigned char>(text[k]) == 0xE2 &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back('-');
      k += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[k]))) out.push_back(text[k]);
  }
  return out;
}

bool valid_integer(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  if (k == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(k), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Rational parse_compact_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + s + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Coefficient of an imaginary term, "" / "+" / "-" stand for 1 / 1 / -1.
Rational parse_imag_coefficient(const std::string& s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_compact_rational(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = normalize_minus(text);
  if (s.empty()) throw ParseError("empty rational");
  return parse_compact_rational(s);
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw std::logic_error("unknown ArithOp");
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s = normalize_minus(text);
  if (s.empty()) throw ParseError("empty number");
  if (s.back() != 'i') return GaussianRational(parse_compact_rational(s));

  std::string body = s.substr(0, s.size() - 1);
  // The split point is the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_imag_coefficient(body)};
  return {parse_compact_rational(body.substr(0, split)),
          parse_imag_coefficient(body.substr(split))};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = to_string(z.im()) + " i";
  }
  if (sgn(z.re()) == 0) return im;
  return to_string(z.re()) + (im[0] == '-' ? "" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

GaussianRational pow(const GaussianRational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace lax
