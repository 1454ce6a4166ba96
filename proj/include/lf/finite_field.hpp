#ifndef LF_FINITE_FIELD_HPP
#define LF_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

class FieldSpec;

/// One element of GF(p^c), identified by its index in the digit enumeration
/// idx = a0 + a1*p + ... + a_{c-1}*p^{c-1}, where (a0,...,a_{c-1}) are the
/// coordinates in the monomial basis {1, z, ..., z^{c-1}}.
struct Scalar {
    const FieldSpec* field = nullptr;
    uint16_t idx = 0;

    bool is_zero() const { return idx == 0; }
    bool operator==(const Scalar&) const = default;
};

/// GF(q), q = p^c, as the residue field of the local field's ring of
/// integers. All arithmetic is table-driven and exact. For c > 1 the
/// representation is Z/p[z] modulo a user-supplied irreducible polynomial;
/// irreducibility is verified exhaustively at construction (c <= 4).
///
/// Instances are immutable after construction and safe for unrestricted
/// concurrent use. Scalars keep a pointer to their field, so a FieldSpec
/// must outlive every value derived from it; it is neither copyable nor
/// movable to keep those pointers stable.
class FieldSpec {
  public:
    /// Prime field GF(p).
    explicit FieldSpec(uint32_t p);

    /// Extension field GF(p^c). `modulus` lists the coefficients
    /// m0 + m1*z + ... + m_c*z^c of a monic degree-c polynomial over Z/p.
    FieldSpec(uint32_t p, uint32_t c, const std::vector<uint32_t>& modulus);

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    uint32_t p() const { return p_; }
    uint32_t ext_degree() const { return c_; }
    uint32_t order() const { return q_; }

    Scalar zero() const { return {this, 0}; }
    Scalar one() const { return {this, 1}; }
    Scalar scalar(uint16_t idx) const;

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    /// Multiplicative inverse; rejects zero.
    Scalar inv(Scalar a) const;

    /// Coordinates (a0,...,a_{c-1}) of a scalar over Z/p.
    std::vector<uint32_t> coords(Scalar a) const;
    /// The coefficient of the basis element 1 (= zeta_0).
    uint32_t coeff0(Scalar a) const { return a.idx % p_; }

    /// The ordered digit alphabet {a_0, ..., a_{q-1}} with a_0 = 0, a_1 = 1,
    /// enumerated in the index order used by the u(n) map.
    std::vector<Scalar> digit_set() const;

    /// Digit-wise GF(q) sum of lattice indices: the r with
    /// u(r) = u(n) + u(m). Same for sub.
    uint64_t index_add(uint64_t n, uint64_t m) const;
    uint64_t index_sub(uint64_t n, uint64_t m) const;

    std::string scalar_to_string(Scalar a) const;

  private:
    void build_tables();
    void check_same_field(Scalar a, Scalar b) const;

    uint32_t p_;
    uint32_t c_;
    uint32_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint16_t> add_table_;
    std::vector<uint16_t> mul_table_;
    std::vector<uint16_t> neg_table_;
    std::vector<uint16_t> inv_table_;
};

}  // namespace lf

#endif
