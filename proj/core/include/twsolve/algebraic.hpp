#pragma once

#include <gmpxx.h>

#include <string>

#include "twsolve/enclosure.hpp"
#include "twsolve/family.hpp"
#include "twsolve/sequences.hpp"

namespace tws {

/// Certified enclosure of the unique real root > 1 of `cubic`, of width
/// at most 2^(-precision+2). Containment is certified by exact rational
/// sign evaluation of the polynomial at the endpoints. Throws NotBracketed
/// when no real root exceeds 1.
RealEnclosure dominant_root(const Cubic& cubic, mpfr_prec_t precision);

/// Enclosures of the Binet decomposition T_n = coeff * root^(n+shift) + r(n)
/// where |r(n)| is controlled by conj_coeff_modulus * conj_modulus^n.
///   root          dominant real root (alpha or phi)
///   coeff         leading coefficient (p, 1, or C_phi)
///   conj_modulus  common modulus of the conjugate roots = root^(-1/2)
///   conj_coeff_modulus  common modulus of the conjugate coefficients
struct BinetData {
  RealEnclosure root;
  RealEnclosure coeff;
  RealEnclosure conj_modulus;
  RealEnclosure conj_coeff_modulus;
  int power_shift = 0;
};

BinetData binet_data_for(const SequenceSpec& spec, mpfr_prec_t precision);

/// Leading Binet coefficient as a closed form of the dominant root:
///   Padovan   p     = (1 + a) / (-a^2 + 3a + 1)
///   Perrin    1     exactly
///   Narayana  C_phi = phi / (3*phi^2 - 2*phi)
/// The result is validated against the coefficient's minimal polynomial
/// (its interval image must contain zero).
RealEnclosure binet_coefficient(const SequenceSpec& spec,
                                const RealEnclosure& root);

struct HeightValue {
  RealEnclosure value;
  std::string description;
};

/// Descriptor of one of the catalogued algebraic numbers whose logarithmic
/// height the pipeline needs. The catalogue is intentionally closed:
/// anything else raises UnsupportedNumber.
class HeightDescriptor {
 public:
  static HeightDescriptor integer(mpz_class m);
  static HeightDescriptor dominant_root_of(SequenceId id);
  static HeightDescriptor binet_coefficient_of(SequenceId id);
  // The combination (b +/- 1) * coeff^(-1) entering the first Matveev
  // height bound; the value is the subadditive upper estimate
  // h(b +/- 1) + h(coeff) <= log b + log 2 + h(coeff).
  static HeightDescriptor base_factor(SequenceId id, BaseSign sign, long b);

  enum class Kind { Integer, DominantRoot, BinetCoefficient, BaseFactor };
  Kind kind() const { return kind_; }
  const mpz_class& int_value() const { return m_; }
  SequenceId sequence() const { return id_; }
  BaseSign base_sign() const { return sign_; }
  long base() const { return b_; }

 private:
  HeightDescriptor() = default;
  Kind kind_ = Kind::Integer;
  mpz_class m_;
  SequenceId id_ = SequenceId::Padovan;
  BaseSign sign_ = BaseSign::Plus;
  long b_ = 0;
};

/// Logarithmic (Weil) height of a catalogued number:
///   h(m) = log m for an integer m >= 1
///   h(root) = log(root)/3   (monic minimal cubic, conjugates inside the
///                            unit circle)
///   h(coeff) = log(lead)/3  (lead = 23 or 31; all zeros inside the unit
///                            circle), h(1) = 0
///   base_factor: log b + log 2 + h(coeff)
HeightValue log_height(const HeightDescriptor& d,
                       mpfr_prec_t precision = kDefaultPrecision);

}  // namespace tws
