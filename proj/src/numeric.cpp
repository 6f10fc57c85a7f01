#include "fibdense/numeric.hpp"

namespace fibdense {

std::string decimal_string(const Rat& v, int decimals) {
  const bool neg = sgn(v) < 0;
  Nat num = abs(v.get_num());
  Nat den = v.get_den();

  Nat scale = nat_pow(Nat(10), static_cast<unsigned long>(decimals));
  Nat t = num * scale;
  Nat q = t / den;
  Nat r = t % den;
  if (2 * r >= den) ++q;  // ties away from zero

  std::string digits = q.get_str();
  std::string out;
  if (decimals == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= decimals)
      digits.insert(0, decimals + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - decimals) + "." +
          digits.substr(digits.size() - decimals);
  }
  if (neg && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace fibdense
