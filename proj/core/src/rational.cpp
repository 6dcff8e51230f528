#include "springer_rca/rational.hpp"

#include "springer_rca/errors.hpp"

namespace springer_rca {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ArgumentError("empty rational literal");
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s);
    } else {
      num = Integer(s.substr(0, slash));
      den = Integer(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ArgumentError("malformed rational literal '" + s + "'");
  }
  if (den == 0) throw ArgumentError("rational with zero denominator: '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace springer_rca
