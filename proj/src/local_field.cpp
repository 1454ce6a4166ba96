#include "lf/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lf {

KNumber::KNumber(const FieldSpec& field, int lo, std::vector<uint16_t> digits)
    : field_(&field), lo_(lo), digits_(std::move(digits)) {
    for (uint16_t d : digits_)
        if (d >= field_->order())
            throw std::invalid_argument("KNumber: digit index out of range");
    canonicalize();
}

void KNumber::canonicalize() {
    size_t first = 0;
    while (first < digits_.size() && digits_[first] == 0) ++first;
    size_t last = digits_.size();
    while (last > first && digits_[last - 1] == 0) --last;
    if (first == last) {
        digits_.clear();
        lo_ = 0;
        return;
    }
    if (first > 0 || last < digits_.size()) {
        digits_ = std::vector<uint16_t>(digits_.begin() + first, digits_.begin() + last);
        lo_ += static_cast<int>(first);
    }
}

Scalar KNumber::digit_at(int power) const {
    if (power < lo_ || power >= hi()) return field_->zero();
    return field_->scalar(digits_[power - lo_]);
}

bool KNumber::operator==(const KNumber& other) const {
    if (field_ != other.field_)
        throw std::invalid_argument("KNumber: comparing values from different fields");
    return lo_ == other.lo_ && digits_ == other.digits_;
}

std::string KNumber::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        const int power = lo_ + static_cast<int>(i);
        std::string d = field_->scalar_to_string(field_->scalar(digits_[i]));
        const bool needs_parens = d.find('+') != std::string::npos;
        if (power == 0) {
            s += needs_parens ? "(" + d + ")" : d;
        } else {
            if (d != "1") s += (needs_parens ? "(" + d + ")" : d) + "*";
            s += "p^" + std::to_string(power);
        }
    }
    return s;
}

namespace {

void check_same(const KNumber& x, const KNumber& y) {
    if (&x.field() != &y.field())
        throw std::invalid_argument("KNumber: operands from different fields");
}

}  // namespace

KNumber k_add(const KNumber& x, const KNumber& y) {
    check_same(x, y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const FieldSpec& fs = x.field();
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    std::vector<uint16_t> digits(static_cast<size_t>(hi - lo), 0);
    for (int p = lo; p < hi; ++p)
        digits[p - lo] = fs.add(x.digit_at(p), y.digit_at(p)).idx;
    return KNumber(fs, lo, std::move(digits));
}

KNumber k_sub(const KNumber& x, const KNumber& y) {
    check_same(x, y);
    const FieldSpec& fs = x.field();
    if (y.is_zero()) return x;
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    std::vector<uint16_t> digits(static_cast<size_t>(hi - lo), 0);
    for (int p = lo; p < hi; ++p)
        digits[p - lo] = fs.sub(x.digit_at(p), y.digit_at(p)).idx;
    return KNumber(fs, lo, std::move(digits));
}

KNumber k_mul(const KNumber& x, const KNumber& y) {
    check_same(x, y);
    const FieldSpec& fs = x.field();
    if (x.is_zero() || y.is_zero()) return KNumber::zero(fs);
    const int nx = x.hi() - x.lo();
    const int ny = y.hi() - y.lo();
    std::vector<uint16_t> digits(static_cast<size_t>(nx + ny - 1), 0);
    for (int i = 0; i < nx; ++i) {
        const Scalar xi = x.digit_at(x.lo() + i);
        if (xi.is_zero()) continue;
        for (int j = 0; j < ny; ++j) {
            const Scalar yj = y.digit_at(y.lo() + j);
            if (yj.is_zero()) continue;
            const Scalar cur = fs.scalar(digits[i + j]);
            digits[i + j] = fs.add(cur, fs.mul(xi, yj)).idx;
        }
    }
    return KNumber(fs, x.lo() + y.lo(), std::move(digits));
}

KNumber p_shift(const KNumber& x, int j) {
    if (x.is_zero()) return x;
    std::vector<uint16_t> digits;
    digits.reserve(static_cast<size_t>(x.hi() - x.lo()));
    for (int p = x.lo(); p < x.hi(); ++p) digits.push_back(x.digit_at(p).idx);
    return KNumber(x.field(), x.lo() + j, std::move(digits));
}

std::optional<int> valuation(const KNumber& x) {
    if (x.is_zero()) return std::nullopt;
    return x.lo();
}

double k_norm(const KNumber& x) {
    const auto v = valuation(x);
    if (!v) return 0.0;
    return std::pow(static_cast<double>(x.field().order()), -static_cast<double>(*v));
}

KNumber u_of_n(const FieldSpec& field, uint64_t n) {
    if (n == 0) return KNumber::zero(field);
    const uint64_t q = field.order();
    std::vector<uint16_t> rev;  // base-q digits, least significant first
    uint64_t m = n;
    while (m != 0) {
        rev.push_back(static_cast<uint16_t>(m % q));
        m /= q;
    }
    // digit t of n sits at power -1-t; window is [-(s+1), 0)
    std::vector<uint16_t> digits(rev.size());
    for (size_t t = 0; t < rev.size(); ++t) digits[digits.size() - 1 - t] = rev[t];
    return KNumber(field, -static_cast<int>(rev.size()), std::move(digits));
}

std::optional<uint32_t> kappa(uint32_t q, uint64_t k) {
    if (q < 2) throw std::invalid_argument("kappa: q must be >= 2");
    if (k == 0) return std::nullopt;
    uint32_t j = 0;
    while (k % q == 0) {
        k /= q;
        ++j;
    }
    return j;
}

}  // namespace lf
