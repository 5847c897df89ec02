#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bldgzeta {

using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;

Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);
bool is_integer(const Rat& x);

/// Canonical string: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

/// Parses "p" or "p/q"; canonicalizes.
Rat rat_parse(const std::string& s);

/// Thread budget for the few parallel loops: min(requested, hardware),
/// where requested defaults to BLDGZETA_THREADS if set, else all cores.
int effective_threads(int requested = 0);

}  // namespace bldgzeta
