#include "bldgzeta/rational.hpp"

#include <cstdlib>
#include <thread>

#include "bldgzeta/errors.hpp"

namespace bldgzeta {

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string int_str(const Int& x) { return x.get_str(); }

Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(errc::malformed_document, "bad rational: " + s);
  if (q.get_den() == 0) fail(errc::malformed_document, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

int effective_threads(int requested) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int limit = hw;
  if (const char* env = std::getenv("BLDGZETA_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1 && v < limit) limit = v;
  }
  if (requested >= 1 && requested < limit) limit = requested;
  return limit;
}

}  // namespace bldgzeta
