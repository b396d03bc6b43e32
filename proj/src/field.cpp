#include "hgalg/field.hpp"

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31)) throw InvalidArgument("field characteristic must be below 2^31");
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "gf2") return gf2();
  if (text == "gf3") return gf3();
  const std::string prefix = "gfP:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
      throw InvalidArgument("bad field characteristic: " + digits);
    }
    const unsigned long long p = std::stoull(digits);
    if (p >= (1ULL << 31)) throw InvalidArgument("field characteristic must be below 2^31");
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw InvalidArgument("unknown field '" + text + "' (expected q, gf2, gf3 or gfP:<p>)");
}

std::string FieldSpec::name() const {
  if (p_ == 0) return "q";
  if (p_ == 2) return "gf2";
  if (p_ == 3) return "gf3";
  return "gfP:" + std::to_string(p_);
}

}  // namespace hgalg
