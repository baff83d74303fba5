#ifndef HURWITZ_ERROR_HPP
#define HURWITZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class Errc {
  invalid_argument,
  zero_element,
  no_odd_primes,
  size_limit_exceeded,
  match_not_found,
  invalid_prime,
  norm_mismatch,
  prime_in_s,
  cap_exceeded,
  singular_generator,
  parse_error,
  not_found,
  overflow,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hurwitz

#endif
