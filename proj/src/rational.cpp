#include "lcplab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lcplab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("bare sign is not a rational");

  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse rational literal: " + text);
  };

  std::string mantissa = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::string es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = (es[0] == '-');
      es.erase(0, 1);
    }
    if (!all_digits(es) || es.size() > 6) throw bad();
    exp10 = std::stol(es);
    if (eneg) exp10 = -exp10;
  }

  Rational value;
  if (auto slash = mantissa.find('/'); slash != std::string::npos) {
    std::string num = mantissa.substr(0, slash);
    std::string den = mantissa.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(BigInt(num), d);
    value.canonicalize();
  } else if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    std::string ip = mantissa.substr(0, dot);
    std::string fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
    if (!ip.empty() && !all_digits(ip)) throw bad();
    if (!fp.empty() && !all_digits(fp)) throw bad();
    BigInt digits((ip.empty() ? "0" : ip) + fp);
    BigInt den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    value = Rational(digits, den);
    value.canonicalize();
  } else {
    if (!all_digits(mantissa)) throw bad();
    value = Rational(BigInt(mantissa));
  }

  while (exp10 > 0) {
    value *= 10;
    --exp10;
  }
  while (exp10 < 0) {
    value /= 10;
    ++exp10;
  }
  if (neg) value = -value;
  return value;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_from_double(double x) {
  Rational r(x);
  r.canonicalize();
  return r;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace lcplab
