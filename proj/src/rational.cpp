#include "latred/rational.hpp"

#include <cctype>

namespace latred {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      neg = num[0] == '-';
      num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad fraction: " + text);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    Rational r(BigInt(num), d);
    return neg ? -r : r;
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string intpart, fracpart, exppart;
  std::size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) intpart += s[j++];
  if (j < s.size() && s[j] == '.') {
    ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) fracpart += s[j++];
  }
  if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
    ++j;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) exppart += s[j++];
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) exppart += s[j++];
    if (exppart.empty() || exppart == "-" || exppart == "+")
      throw ParseError("bad exponent: " + text);
  }
  if (j != s.size() || (intpart.empty() && fracpart.empty()))
    throw ParseError("bad rational literal: " + text);

  BigInt digits(intpart.empty() ? "0" : intpart);
  for (char c : fracpart) digits = digits * 10 + (c - '0');
  long exp = exppart.empty() ? 0 : std::stol(exppart);
  long shift = exp - static_cast<long>(fracpart.size());

  Rational r(digits, 1);
  if (shift > 0)
    r *= Rational(pow10(shift), 1);
  else if (shift < 0)
    r /= Rational(pow10(-shift), 1);
  return neg ? -r : r;
}

std::string to_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

}  // namespace latred
