#include "rbl2/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "rbl2/errors.hpp"

namespace rbl2 {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw BadRational("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw BadRational("malformed rational \"" + original + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw BadRational("zero denominator in \"" + original + "\"");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1 && n != 0) throw BadRational("rational \"" + original + "\" is not in lowest terms");
    if (n == 0 && d != 1) throw BadRational("zero must be written \"0\", got \"" + original + "\"");
  }
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw BadRational("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace rbl2
