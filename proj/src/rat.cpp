#include "pfc/rat.hpp"

#include <cctype>

namespace pfc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  // exponent suffix
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) return std::nullopt;
    for (char c : es) exp10 = exp10 * 10 + (c - '0');
    if (eneg) exp10 = -exp10;
  }

  Int num, den = 1;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) return std::nullopt;
    std::string_view a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    num = Int(std::string(a), 10);
    den = Int(std::string(b), 10);
    if (den == 0) return std::nullopt;
  } else if (dot != std::string_view::npos) {
    std::string_view a = s.substr(0, dot), b = s.substr(dot + 1);
    if (a.empty() && b.empty()) return std::nullopt;
    if (!a.empty() && !all_digits(a)) return std::nullopt;
    if (!b.empty() && !all_digits(b)) return std::nullopt;
    std::string digits = std::string(a) + std::string(b);
    if (digits.empty()) return std::nullopt;
    num = Int(digits, 10);
    for (std::size_t i = 0; i < b.size(); ++i) den *= 10;
  } else {
    if (!all_digits(s)) return std::nullopt;
    num = Int(std::string(s), 10);
  }

  while (exp10 > 0) num *= 10, --exp10;
  while (exp10 < 0) den *= 10, ++exp10;
  if (neg) num = -num;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_display(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rat_str(q);
}

}  // namespace pfc
