#ifndef HGALG_FIELD_HPP
#define HGALG_FIELD_HPP

#include <cstdint>
#include <string>

namespace hgalg {

/// Coefficient field: GF(p) for a prime p < 2^31, or the rationals.
class FieldSpec {
 public:
  static FieldSpec prime_field(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf2() { return FieldSpec(2); }
  static FieldSpec gf3() { return FieldSpec(3); }

  /// Accepts "q", "gf2", "gf3" and "gfP:<p>".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  /// Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace hgalg

#endif  // HGALG_FIELD_HPP
