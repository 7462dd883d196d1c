#include "supenum/charsum.hpp"

#include <sstream>

namespace supenum {

void CyclotomicInt::normalize() {
    long long last = coeffs_[p_ - 1];
    if (last == 0) return;
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (unsigned j = 0; j < p_; ++j) coeffs_[j] -= last;
}

CyclotomicInt CyclotomicInt::integer(unsigned p, long long v) {
    CyclotomicInt z(p);
    z.coeffs_[0] = v;
    return z;
}

CyclotomicInt CyclotomicInt::root_power(unsigned p, unsigned long long e) {
    CyclotomicInt z(p);
    z.coeffs_[e % p] = 1;
    z.normalize();
    return z;
}

bool CyclotomicInt::is_zero() const {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::is_integer(long long& out) const {
    for (unsigned j = 1; j < p_; ++j)
        if (coeffs_[j] != 0) return false;
    out = coeffs_[0];
    return true;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& rhs) const {
    if (p_ != rhs.p_) throw Error("cyclotomic integers over different primes");
    CyclotomicInt z(p_);
    for (unsigned j = 0; j < p_; ++j) z.coeffs_[j] = coeffs_[j] + rhs.coeffs_[j];
    z.normalize();
    return z;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& rhs) const {
    if (p_ != rhs.p_) throw Error("cyclotomic integers over different primes");
    CyclotomicInt z(p_);
    for (unsigned j = 0; j < p_; ++j) z.coeffs_[j] = coeffs_[j] - rhs.coeffs_[j];
    z.normalize();
    return z;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& rhs) const {
    if (p_ != rhs.p_) throw Error("cyclotomic integers over different primes");
    CyclotomicInt z(p_);
    // convolution with exponents mod p (zeta^p = 1)
    for (unsigned i = 0; i < p_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < p_; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            z.coeffs_[(i + j) % p_] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    z.normalize();
    return z;
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (unsigned j = 0; j < p_; ++j) {
        long long c = coeffs_[j];
        if (c == 0) continue;
        if (any)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        long long a = c < 0 ? -c : c;
        if (j == 0 || a != 1) os << a;
        if (j >= 1) {
            if (a != 1) os << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

CyclotomicInt character(const Field& field, unsigned element_index) {
    return CyclotomicInt::root_power(field.characteristic(), field.trace(element_index));
}

CyclotomicInt character(const FieldElement& x) {
    return character(*x.field(), x.index());
}

CyclotomicInt full_field_char_sum(const Field& field) {
    CyclotomicInt acc(field.characteristic());
    for (unsigned x = 0; x < field.order(); ++x) acc = acc + character(field, x);
    return acc;
}

CyclotomicInt scaled_char_sum(const FieldElement& c) {
    const Field& f = *c.field();
    CyclotomicInt acc(f.characteristic());
    for (unsigned lambda = 1; lambda < f.order(); ++lambda)
        acc = acc + character(f, f.mul(lambda, c.index()));
    return acc;
}

CyclotomicInt lemma_char_sum(const LinearCode& code, const Vector& u, std::uint64_t cap) {
    if (!same_field(u.field(), code.field())) throw FieldMismatch("character sum across fields");
    if (u.size() != code.length()) throw DimensionMismatch("character sum length mismatch");
    const Field& f = *code.field();
    const unsigned p = f.characteristic();

    // bucket codewords by Tr(u . c), then contract against zeta powers
    std::vector<long long> bucket(p, 0);
    code.for_each_codeword(cap, [&](const Vector& c) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u.idx(i), c.idx(i)));
        ++bucket[f.trace(acc)];
    });

    CyclotomicInt sum(p);
    for (unsigned t = 0; t < p; ++t)
        sum = sum + CyclotomicInt::integer(p, bucket[t]) * CyclotomicInt::root_power(p, t);
    return sum;
}

}  // namespace supenum
