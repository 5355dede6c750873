#include "tripack/real.hpp"

#include <cstdlib>
#include <cstring>

namespace tripack {

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  std::string mag = neg ? m.substr(1) : m;
  // mpfr convention: value = 0.mag * 10^e
  std::string out;
  if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + mag;
  } else if (e > 0 && e <= digits + 4) {
    if (static_cast<size_t>(e) >= mag.size())
      out = mag + std::string(static_cast<size_t>(e) - mag.size(), '0');
    else
      out = mag.substr(0, static_cast<size_t>(e)) + "." + mag.substr(static_cast<size_t>(e));
  } else {
    out = "0." + mag + "e" + std::to_string(e);
  }
  // trim trailing zeros after a decimal point
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') last--;
    out.erase(last + 1);
  }
  return neg ? "-" + out : out;
}

Real acos_clamped(const Real& x, const Real& eps) {
  long c = mpfr_cmp_si(x.raw(), 1);
  if (c > 0) {
    Real over = x - 1L;
    if (over > eps) throw std::domain_error("arccos argument " + x.str(20) + " above 1");
    return Real(0.0, x.prec());
  }
  c = mpfr_cmp_si(x.raw(), -1);
  if (c < 0) {
    Real under = -(x + 1L);
    if (under > eps) throw std::domain_error("arccos argument " + x.str(20) + " below -1");
    return Real::pi(x.prec());
  }
  return acos(x);
}

}  // namespace tripack
