#ifndef LF_LOCAL_FIELD_HPP
#define LF_LOCAL_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lf/finite_field.hpp"

namespace lf {

/// An element of K = GF(q)((p)) held as a finite digit window: the digit at
/// power lo + i is digits[i]. Stored canonically (no zero digits at either
/// end; zero is the empty window), so equality of canonical forms is
/// equality in K. Digit-window arithmetic is exact: the represented
/// elements are Laurent polynomials in the prime element, which is all the
/// finite models ever need.
class KNumber {
  public:
    explicit KNumber(const FieldSpec& field) : field_(&field) {}
    KNumber(const FieldSpec& field, int lo, std::vector<uint16_t> digits);

    static KNumber zero(const FieldSpec& field) { return KNumber(field); }
    static KNumber one(const FieldSpec& field) { return KNumber(field, 0, {1}); }
    /// The prime element itself.
    static KNumber prime(const FieldSpec& field) { return KNumber(field, 1, {1}); }

    const FieldSpec& field() const { return *field_; }
    bool is_zero() const { return digits_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(digits_.size()); }
    /// Digit at an arbitrary power (zero outside the window).
    Scalar digit_at(int power) const;

    bool operator==(const KNumber& other) const;
    bool operator!=(const KNumber& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    void canonicalize();

    const FieldSpec* field_;
    int lo_ = 0;
    std::vector<uint16_t> digits_;
};

/// Digit-wise sum; there are no carries in characteristic p.
KNumber k_add(const KNumber& x, const KNumber& y);
KNumber k_sub(const KNumber& x, const KNumber& y);
/// Cauchy convolution of digit windows over GF(q).
KNumber k_mul(const KNumber& x, const KNumber& y);
/// Multiplication by the j-th power of the prime element.
KNumber p_shift(const KNumber& x, int j);

/// Index of the lowest nonzero digit; nullopt for zero.
std::optional<int> valuation(const KNumber& x);
/// |x| = q^{-valuation}; |0| = 0.
double k_norm(const KNumber& x);

/// The coset-representative map: u(n) has the base-q digits of n written at
/// powers -1, -2, ... with each base-q digit encoded through the digit
/// alphabet of the field.
KNumber u_of_n(const FieldSpec& field, uint64_t n);

/// Number of trailing zero base-q digits of k; nullopt (infinity) for k = 0.
/// Equivalently the largest j >= 0 such that p^j u(k) is again a lattice
/// point u(k / q^j).
std::optional<uint32_t> kappa(uint32_t q, uint64_t k);

}  // namespace lf

#endif
