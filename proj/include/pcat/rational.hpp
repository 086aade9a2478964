#pragma once

#include <string>

#include <gmpxx.h>

namespace pcat {

/// Exact rational arithmetic; every rank and equality decision uses this.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace pcat
