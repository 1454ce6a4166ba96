#include "lf/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace lf {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over Z/p as coefficient vectors, lowest degree first.
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(r));
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    a = poly_trim(std::move(a));
    const size_t deg_m = m.size() - 1;
    while (a.size() > deg_m) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - deg_m;
        for (size_t i = 0; i < m.size(); ++i) {
            uint32_t& c = a[shift + i];
            c = (c + (p - (lead * m[i]) % p)) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

// Exhaustive factor search: true iff m (monic, degree c) has a monic
// divisor of degree 1..c/2 over Z/p.
bool poly_has_proper_factor(const Poly& m, uint32_t p) {
    const size_t c = m.size() - 1;
    for (size_t d = 1; d <= c / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            uint64_t x = code;
            for (size_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(x % p);
                x /= p;
            }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return true;
        }
    }
    return false;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p) : FieldSpec(p, 1, {}) {}

FieldSpec::FieldSpec(uint32_t p, uint32_t c, const std::vector<uint32_t>& modulus)
    : p_(p), c_(c), modulus_(modulus) {
    if (!is_prime(p_)) throw std::invalid_argument("FieldSpec: p must be prime");
    if (c_ < 1 || c_ > 4)
        throw std::invalid_argument("FieldSpec: extension degree must be in [1, 4]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < c_; ++i) q *= p_;
    if (q > 256) throw std::invalid_argument("FieldSpec: q = p^c must be <= 256");
    q_ = static_cast<uint32_t>(q);

    if (c_ == 1) {
        modulus_.clear();
    } else {
        if (modulus_.size() != c_ + 1)
            throw std::invalid_argument("FieldSpec: modulus must have degree c");
        for (auto& coeff : modulus_) coeff %= p_;
        if (modulus_.back() != 1)
            throw std::invalid_argument("FieldSpec: modulus must be monic");
        if (poly_has_proper_factor(modulus_, p_))
            throw std::invalid_argument("FieldSpec: modulus is reducible over Z/p");
    }
    build_tables();
}

void FieldSpec::build_tables() {
    add_table_.assign(size_t(q_) * q_, 0);
    mul_table_.assign(size_t(q_) * q_, 0);
    neg_table_.assign(q_, 0);
    inv_table_.assign(q_, 0);

    auto decode = [&](uint32_t idx) {
        Poly a(c_, 0);
        for (uint32_t i = 0; i < c_; ++i) {
            a[i] = idx % p_;
            idx /= p_;
        }
        return a;
    };
    auto encode = [&](const Poly& a) {
        uint32_t idx = 0, w = 1;
        for (uint32_t i = 0; i < c_; ++i) {
            if (i < a.size()) idx += a[i] * w;
            w *= p_;
        }
        return static_cast<uint16_t>(idx);
    };

    for (uint32_t i = 0; i < q_; ++i) {
        const Poly a = decode(i);
        Poly na(c_, 0);
        for (uint32_t t = 0; t < c_; ++t) na[t] = (p_ - a[t]) % p_;
        neg_table_[i] = encode(na);
        for (uint32_t j = 0; j < q_; ++j) {
            const Poly b = decode(j);
            Poly s(c_, 0);
            for (uint32_t t = 0; t < c_; ++t) s[t] = (a[t] + b[t]) % p_;
            add_table_[size_t(i) * q_ + j] = encode(s);
            Poly prod = poly_mul(poly_trim(a), poly_trim(b), p_);
            if (c_ > 1) prod = poly_mod(std::move(prod), modulus_, p_);
            else if (!prod.empty()) prod = {prod[0]};
            mul_table_[size_t(i) * q_ + j] = encode(prod);
        }
    }
    for (uint32_t i = 1; i < q_; ++i) {
        for (uint32_t j = 1; j < q_; ++j) {
            if (mul_table_[size_t(i) * q_ + j] == 1) {
                inv_table_[i] = static_cast<uint16_t>(j);
                break;
            }
        }
    }
}

Scalar FieldSpec::scalar(uint16_t idx) const {
    if (idx >= q_) throw std::out_of_range("FieldSpec::scalar: index out of range");
    return {this, idx};
}

void FieldSpec::check_same_field(Scalar a, Scalar b) const {
    if (a.field != this || b.field != this)
        throw std::invalid_argument("FieldSpec: operands belong to a different field");
}

Scalar FieldSpec::add(Scalar a, Scalar b) const {
    check_same_field(a, b);
    return {this, add_table_[size_t(a.idx) * q_ + b.idx]};
}

Scalar FieldSpec::sub(Scalar a, Scalar b) const {
    check_same_field(a, b);
    return {this, add_table_[size_t(a.idx) * q_ + neg_table_[b.idx]]};
}

Scalar FieldSpec::mul(Scalar a, Scalar b) const {
    check_same_field(a, b);
    return {this, mul_table_[size_t(a.idx) * q_ + b.idx]};
}

Scalar FieldSpec::neg(Scalar a) const {
    check_same_field(a, a);
    return {this, neg_table_[a.idx]};
}

Scalar FieldSpec::inv(Scalar a) const {
    check_same_field(a, a);
    if (a.idx == 0) throw std::domain_error("FieldSpec::inv: zero has no inverse");
    return {this, inv_table_[a.idx]};
}

std::vector<uint32_t> FieldSpec::coords(Scalar a) const {
    check_same_field(a, a);
    std::vector<uint32_t> out(c_, 0);
    uint32_t idx = a.idx;
    for (uint32_t i = 0; i < c_; ++i) {
        out[i] = idx % p_;
        idx /= p_;
    }
    return out;
}

std::vector<Scalar> FieldSpec::digit_set() const {
    std::vector<Scalar> out;
    out.reserve(q_);
    for (uint32_t i = 0; i < q_; ++i) out.push_back({this, static_cast<uint16_t>(i)});
    return out;
}

uint64_t FieldSpec::index_add(uint64_t n, uint64_t m) const {
    uint64_t out = 0, w = 1;
    while (n != 0 || m != 0) {
        const uint16_t dn = static_cast<uint16_t>(n % q_);
        const uint16_t dm = static_cast<uint16_t>(m % q_);
        out += uint64_t(add_table_[size_t(dn) * q_ + dm]) * w;
        n /= q_;
        m /= q_;
        w *= q_;
    }
    return out;
}

uint64_t FieldSpec::index_sub(uint64_t n, uint64_t m) const {
    uint64_t out = 0, w = 1;
    while (n != 0 || m != 0) {
        const uint16_t dn = static_cast<uint16_t>(n % q_);
        const uint16_t dm = static_cast<uint16_t>(m % q_);
        out += uint64_t(add_table_[size_t(dn) * q_ + neg_table_[dm]]) * w;
        n /= q_;
        m /= q_;
        w *= q_;
    }
    return out;
}

std::string FieldSpec::scalar_to_string(Scalar a) const {
    if (c_ == 1) return std::to_string(a.idx);
    const auto co = coords(a);
    std::string s;
    for (uint32_t i = 0; i < c_; ++i) {
        if (co[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(co[i]);
        } else {
            if (co[i] != 1) s += std::to_string(co[i]) + "*";
            s += "z";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace lf
