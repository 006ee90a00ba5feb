#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace bimodcat {

/// Exact rational scalar. Arbitrary precision, always kept in canonical
/// form (reduced fraction, positive denominator).
using Rat = mpq_class;

using Vec = std::vector<Rat>;

/// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on garbage
/// or zero denominator.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// Formats as "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace bimodcat
