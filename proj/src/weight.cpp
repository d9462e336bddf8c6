#include "tinlab/weight.hpp"

#include <algorithm>
#include <cctype>

#include "tinlab/errors.hpp"

namespace tinlab {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mp::cpp_int to_int(std::string_view digits) { return mp::cpp_int(std::string(digits)); }

}  // namespace

Weight parse_weight(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw InputError("empty weight");
  if (s.front() == '-') throw InputError("negative weight '" + std::string(text) + "'");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("malformed weight '" + std::string(text) + "'");
    mp::cpp_int d = to_int(den);
    if (d == 0) throw InputError("zero denominator in weight '" + std::string(text) + "'");
    return Weight(to_int(num), d);
  }

  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw InputError("malformed weight '" + std::string(text) + "'");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
      (dot != std::string_view::npos && frac.empty() && whole.empty())) {
    throw InputError("malformed weight '" + std::string(text) + "'");
  }

  mp::cpp_int numerator = whole.empty() ? mp::cpp_int(0) : to_int(whole);
  mp::cpp_int scale = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    scale *= 10;
  }
  return Weight(numerator, scale);
}

std::string format_weight(const Weight& w) {
  mp::cpp_int num = mp::numerator(w);
  mp::cpp_int den = mp::denominator(w);
  if (den == 1) return num.str();

  // Terminating decimal iff den = 2^a 5^b.
  mp::cpp_int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  unsigned places = std::max(twos, fives);
  mp::cpp_int scaled = num * mp::pow(mp::cpp_int(10), places) / den;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return digits;
}

}  // namespace tinlab
