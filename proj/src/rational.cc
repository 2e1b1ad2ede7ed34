#include "hideseek/rational.h"

#include <charconv>
#include <cstdlib>

#include "hideseek/error.h"

namespace hideseek {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorKind::kMultipleCycles: return "MultipleCycles";
    case ErrorKind::kNotBehindCycle: return "NotBehindCycle";
    case ErrorKind::kBadHeight: return "BadHeight";
    case ErrorKind::kBadShape: return "BadShape";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kEmptyFrontier: return "EmptyFrontier";
    case ErrorKind::kPolicyViolation: return "PolicyViolation";
    case ErrorKind::kNotATree: return "NotATree";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kBadInput: return "BadInput";
  }
  return "Unknown";
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::kBadInput,
                 "not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num, den;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(text.substr(slash + 1)), 10) != 0 || den == 0) {
      throw fail();
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) throw fail();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();

  mpz_class num(digits, 10);
  if (negative) num = -num;
  exponent -= frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

Rational rational_from_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorKind::kBadInput, "unrepresentable number");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

}  // namespace hideseek
