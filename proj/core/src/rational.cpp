#include "racforge/rational.hpp"

#include <ostream>

#include "racforge/errors.hpp"

namespace racforge {

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw InvalidParameter("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw InvalidParameter("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(text)));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("malformed rational literal: " + text);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidParameter("rational division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::fits_small_int() const {
  if (v_.get_den() != 1) return false;
  const mpz_class& n = v_.get_num();
  return n.fits_slong_p() && n.get_si() < (1L << 30) && n.get_si() > -(1L << 30);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

long floor_div_long(const Rational& r, long cell) {
  mpz_class q;
  mpz_class d = r.den() * cell;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), d.get_mpz_t());
  return q.get_si();
}

}  // namespace racforge
