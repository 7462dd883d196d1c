// Exact arithmetic in F_{p^m} for small prime powers (q <= 64).
//
// Elements are stored as indices in [0, q): the base-p digits of the index
// are the coefficients of the residue polynomial, so index 0 is the additive
// identity and index 1 the multiplicative identity.  Fields are interned and
// immutable; all operations are table lookups precomputed at construction.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "supenum/errors.hpp"

namespace supenum {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
  public:
    unsigned index() const { return idx_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.idx_ == b.idx_;
    }

  private:
    friend class Field;
    FieldElement(FieldPtr f, std::uint8_t idx) : field_(std::move(f)), idx_(idx) {}
    FieldPtr field_;
    std::uint8_t idx_;
};

class Field : public std::enable_shared_from_this<Field> {
  public:
    static constexpr unsigned kMaxOrder = 64;

    /// Construct (or fetch the interned copy of) F_{p^m}.  For m > 1 the
    /// modulus is the coefficient list c_0..c_m of a monic irreducible
    /// polynomial over F_p; when omitted a built-in modulus is used.
    static FieldPtr make(unsigned p, unsigned m);
    static FieldPtr make(unsigned p, unsigned m, const std::vector<unsigned>& modulus);

    /// F_q for a prime-power order q (built-in modulus for extensions).
    static FieldPtr of_order(unsigned q);

    /// Built-in modulus for (p, m), or empty if none is shipped.  These are
    /// the lexicographically smallest irreducible monic polynomials: smallest
    /// coefficient tuple (c_{m-1}, ..., c_1, c_0) compared left to right,
    /// equivalently smallest base-p integer encoding sum c_i * p^i.
    static std::vector<unsigned> builtin_modulus(unsigned p, unsigned m);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    unsigned order() const { return q_; }
    /// c_0..c_m for extensions, empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement element(unsigned index) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // Index-level arithmetic; inputs must be < order().  These back the
    // FieldElement operators and the hot enumeration loops.
    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, long long e) const;

    /// Absolute trace Tr(x) = x + x^p + ... + x^{p^(m-1)}, as an F_p index.
    unsigned trace(unsigned a) const { return trace_[a]; }
    unsigned trace(const FieldElement& x) const;

    /// Human-readable description, e.g. "F_8 = F_2[x]/(x^3+x+1)".
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

  private:
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);
    struct Intern;

    unsigned p_, m_, q_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint8_t> add_, mul_;  // q x q tables
    std::vector<std::uint8_t> neg_, inv_, trace_;
};

/// Same interned field (structural identity).
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a.get() == b.get();
}

}  // namespace supenum
