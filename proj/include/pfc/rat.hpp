// Exact rational arithmetic (GMP) plus parsing/printing conventions.
#ifndef PFC_RAT_HPP
#define PFC_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pfc {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// 2^e for any integer e.
inline Rat pow2(int e) {
  if (e >= 0) return Rat(Int(1) << e);
  Rat q(Int(1), Int(1) << (-e));
  q.canonicalize();
  return q;
}

// Largest integer m with m*step <= x (step > 0).
inline Int floor_multiple(const Rat& x, const Rat& step) {
  Rat q = x / step;
  Int m;
  mpz_fdiv_q(m.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return m;
}

// Smallest integer m with m*step >= x.
inline Int ceil_multiple(const Rat& x, const Rat& step) {
  Rat q = x / step;
  Int m;
  mpz_cdiv_q(m.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return m;
}

// Accepts "p/q", integers, plain decimals ("0.25", "-1.5") and scientific
// notation with integral mantissa digits ("1e-6", "2.5e3"); all exact.
std::optional<Rat> parse_rat(std::string_view s);

// Canonical "num/den" form used by the JSON report schema.
std::string rat_str(const Rat& q);
// Human form: integer when den == 1, else "num/den".
std::string rat_display(const Rat& q);

}  // namespace pfc

#endif
