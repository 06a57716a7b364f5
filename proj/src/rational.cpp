#include "posmap/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace posmap {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  if (max_den < 1) throw std::invalid_argument("rationalize: max_den < 1");
  Rational exact(x);  // exact binary expansion of the double
  exact.canonicalize();
  if (exact.get_den() <= max_den) return exact;

  // Continued-fraction convergents of the exact value; p1/q1 is the last
  // convergent with q1 <= max_den, and the best semiconvergent may beat it.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rem = exact;
  while (true) {
    mpz_class a = rem.get_num() / rem.get_den();  // floor for the loop invariants below
    if (rem.get_num() < 0 && rem.get_num() % rem.get_den() != 0) a -= 1;
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest k with q0 + k*q1 <= max_den gives the best semiconvergent.
      mpz_class k = (mpz_class(max_den) - q0) / q1;
      Rational semi(p0 + k * p1, q0 + k * q1);
      semi.canonicalize();
      Rational conv(p1, q1);
      conv.canonicalize();
      Rational err_semi = abs(exact - semi), err_conv = abs(exact - conv);
      return err_semi < err_conv ? semi : conv;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rem - Rational(a);
    if (frac == 0) {
      Rational out(p1, q1);
      out.canonicalize();
      return out;
    }
    rem = 1 / frac;
  }
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t = s.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = t, den = "1";
  if (auto pos = t.find('/'); pos != std::string::npos) {
    num = t.substr(0, pos);
    den = t.substr(pos + 1);
  }
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  mpz_class dz(den);
  if (dz == 0) throw std::invalid_argument("parse_rational: zero denominator");
  Rational q(mpz_class(num), dz);
  q.canonicalize();
  return q;
}

}  // namespace posmap
