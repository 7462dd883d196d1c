// Additive character sums evaluated exactly in Z[zeta_p].
//
// A CyclotomicInt is an integer combination of 1, zeta, ..., zeta^(p-1)
// normalized so the zeta^(p-1) coefficient is zero (via the relation
// 1 + zeta + ... + zeta^(p-1) = 0).  Z[zeta_p] has rank p-1, so with that
// slot pinned, equality of values is equality of coefficient vectors.  The
// fixed nontrivial character is chi(x) = zeta_p^Tr(x).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supenum/code.hpp"

namespace supenum {

class CyclotomicInt {
  public:
    /// Zero in Z[zeta_p].
    explicit CyclotomicInt(unsigned p) : p_(p), coeffs_(p, 0) {}

    /// The rational integer v.
    static CyclotomicInt integer(unsigned p, long long v);

    /// zeta_p^e in canonical form (e reduced mod p).
    static CyclotomicInt root_power(unsigned p, unsigned long long e);

    unsigned prime() const { return p_; }
    /// Canonical coefficients of zeta^0..zeta^(p-1); the last entry is 0.
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// The integer value if the element is rational, else nullopt-like throw-free check.
    bool is_integer(long long& out) const;

    CyclotomicInt operator+(const CyclotomicInt& rhs) const;
    CyclotomicInt operator-(const CyclotomicInt& rhs) const;
    CyclotomicInt operator*(const CyclotomicInt& rhs) const;

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    /// e.g. "-1 + 2*z" with z = zeta_p.
    std::string to_string() const;

  private:
    void normalize();
    unsigned p_;
    std::vector<long long> coeffs_;
};

/// chi(x) = zeta_p^Tr(x); chi(0) = 1 and chi(a+b) = chi(a) chi(b).
CyclotomicInt character(const Field& field, unsigned element_index);
CyclotomicInt character(const FieldElement& x);

/// Sum of chi(x) over the whole field; zero, since chi is nontrivial.
CyclotomicInt full_field_char_sum(const Field& field);

/// Sum of chi(lambda * c) over lambda in F_q^*: q-1 when c = 0, else -1.
CyclotomicInt scaled_char_sum(const FieldElement& c);

/// S(u) = sum over codewords c of chi(u . c): |C| when u is in the dual
/// code, zero otherwise.  Computed by full enumeration.
CyclotomicInt lemma_char_sum(const LinearCode& code, const Vector& u,
                             std::uint64_t cap = kDefaultEnumCap);

}  // namespace supenum
