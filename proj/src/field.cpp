#include "supenum/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace supenum {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p as coefficient vectors c_0..c_deg (c_deg != 0
// unless the polynomial is zero).  Only what the irreducibility check needs.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a mod b (b monic), coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    while (a.size() >= b.size()) {
        unsigned lead = a.back();  // b is monic, so the quotient digit is just lead
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned sub = (lead * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

// Exhaustive trial division; fine since p^m <= 64.
bool is_irreducible(const Poly& f, unsigned p) {
    unsigned m = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= m; ++d) {
        // all monic divisor candidates of degree d
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            unsigned c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct BuiltinModulus {
    unsigned p, m;
    std::vector<unsigned> coeffs;  // c_0..c_m
};

// Lexicographically smallest irreducible monic polynomial per (p, m); each is
// re-derived by an exhaustive search in the test suite.
const BuiltinModulus kBuiltinModuli[] = {
    {2, 2, {1, 1, 1}},           // x^2+x+1
    {2, 3, {1, 1, 0, 1}},        // x^3+x+1
    {2, 4, {1, 1, 0, 0, 1}},     // x^4+x+1
    {2, 5, {1, 0, 1, 0, 0, 1}},  // x^5+x^2+1
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},  // x^6+x+1
    {3, 2, {1, 0, 1}},           // x^2+1
    {3, 3, {1, 2, 0, 1}},        // x^3+2x+1
    {5, 2, {2, 0, 1}},           // x^2+2
    {7, 2, {1, 0, 1}},           // x^2+1
};

}  // namespace

std::vector<unsigned> Field::builtin_modulus(unsigned p, unsigned m) {
    for (const auto& b : kBuiltinModuli)
        if (b.p == p && b.m == m) return b.coeffs;
    return {};
}

struct Field::Intern {
    std::mutex mutex;
    std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, FieldPtr> cache;
    static Intern& instance() {
        static Intern i;
        return i;
    }
};

FieldPtr Field::make(unsigned p, unsigned m) {
    if (m > 1) {
        auto mod = builtin_modulus(p, m);
        if (mod.empty() && is_prime(p) && m >= 1) {
            // reject before the size check only when the size is fine,
            // so FieldTooLarge still wins for huge (p, m)
            double approx = 1;
            for (unsigned i = 0; i < m; ++i) approx *= p;
            if (approx <= kMaxOrder)
                throw UnsupportedField("no built-in modulus for p=" + std::to_string(p) +
                                       ", m=" + std::to_string(m) + " and none supplied");
        }
        return make(p, m, mod);
    }
    return make(p, m, {});
}

FieldPtr Field::make(unsigned p, unsigned m, const std::vector<unsigned>& modulus) {
    auto& intern = Intern::instance();
    std::lock_guard lock(intern.mutex);
    auto key = std::make_tuple(p, m, modulus);
    auto it = intern.cache.find(key);
    if (it != intern.cache.end()) return it->second;
    FieldPtr f(new Field(p, m, modulus));
    intern.cache.emplace(std::move(key), f);
    return f;
}

FieldPtr Field::of_order(unsigned q) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        unsigned m = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) break;  // q has a second prime factor
        return make(p, m);
    }
    throw NonPrimeCharacteristic(std::to_string(q) + " is not a prime power");
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw NonPrimeCharacteristic(std::to_string(p) + " is not prime");
    if (m < 1) throw UnsupportedField("extension degree must be >= 1");

    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw FieldTooLarge("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
    q_ = static_cast<unsigned>(q);

    if (m == 1) {
        if (!modulus_.empty()) throw UnsupportedField("prime fields take no modulus");
    } else {
        if (modulus_.size() != m + 1) throw ReducibleModulus("modulus must be monic of degree m");
        for (unsigned c : modulus_)
            if (c >= p) throw ReducibleModulus("modulus coefficients must lie in [0, p)");
        if (modulus_.back() != 1) throw ReducibleModulus("modulus must be monic");
        if (!is_irreducible(modulus_, p))
            throw ReducibleModulus("modulus is reducible over F_" + std::to_string(p));
    }

    // digit decomposition of every index
    std::vector<std::vector<unsigned>> digits(q_, std::vector<unsigned>(m_));
    for (unsigned a = 0; a < q_; ++a) {
        unsigned v = a;
        for (unsigned i = 0; i < m_; ++i) {
            digits[a][i] = v % p_;
            v /= p_;
        }
    }
    auto encode = [&](const std::vector<unsigned>& d) {
        unsigned v = 0;
        for (unsigned i = m_; i-- > 0;) v = v * p_ + d[i];
        return v;
    };

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    trace_.resize(q_);

    for (unsigned a = 0; a < q_; ++a) {
        std::vector<unsigned> nd(m_);
        for (unsigned i = 0; i < m_; ++i) nd[i] = (p_ - digits[a][i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(encode(nd));
        for (unsigned b = 0; b < q_; ++b) {
            std::vector<unsigned> s(m_);
            for (unsigned i = 0; i < m_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
            add_[std::size_t(a) * q_ + b] = static_cast<std::uint8_t>(encode(s));
        }
    }

    // schoolbook product with reduction by the modulus
    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = 0; b < q_; ++b) {
            std::vector<unsigned> prod(2 * m_ - 1, 0);
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j)
                    prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
            if (m_ > 1) {
                for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
                    unsigned lead = prod[d];
                    if (lead == 0) continue;
                    prod[d] = 0;
                    // x^d = x^(d-m) * (x^m mod modulus); modulus is monic
                    for (unsigned i = 0; i < m_; ++i) {
                        unsigned sub = (lead * modulus_[i]) % p_;
                        prod[d - m_ + i] = (prod[d - m_ + i] + p_ - sub) % p_;
                    }
                }
            }
            prod.resize(m_);
            mul_[std::size_t(a) * q_ + b] = static_cast<std::uint8_t>(encode(prod));
        }
    }

    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }

    // Tr(x) = sum of Frobenius images x^(p^j); lands in the prime subfield,
    // whose elements are exactly the indices 0..p-1.
    for (unsigned a = 0; a < q_; ++a) {
        unsigned acc = 0;
        unsigned cur = a;
        for (unsigned j = 0; j < m_; ++j) {
            acc = add(acc, cur);
            unsigned next = cur;
            for (unsigned s = 1; s < p_; ++s) next = mul(next, cur);  // cur^p
            cur = next;
        }
        trace_[a] = static_cast<std::uint8_t>(acc);
    }
}

FieldElement Field::element(unsigned index) const {
    if (index >= q_)
        throw Error("element index " + std::to_string(index) + " out of range for " + describe());
    return FieldElement(shared_from_this(), static_cast<std::uint8_t>(index));
}

unsigned Field::inv(unsigned a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
    return inv_[a];
}

unsigned Field::pow(unsigned a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    unsigned result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

unsigned Field::trace(const FieldElement& x) const {
    if (x.field().get() != this) throw FieldMismatch("trace argument from a different field");
    return trace_[x.index()];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (m_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (unsigned d = m_ + 1; d-- > 0;) {
            unsigned c = d < modulus_.size() ? modulus_[d] : 0;
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (d == 0 || c > 1) os << c;
            if (d >= 1) os << "x";
            if (d > 1) os << "^" << d;
        }
        os << ")";
    }
    return os.str();
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldMismatch("operands belong to different fields");
    return *a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const Field& f = common_field(*this, rhs);
    return f.element(f.add(idx_, rhs.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const Field& f = common_field(*this, rhs);
    return f.element(f.sub(idx_, rhs.idx_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const Field& f = common_field(*this, rhs);
    return f.element(f.mul(idx_, rhs.idx_));
}

FieldElement FieldElement::operator-() const {
    return field_->element(field_->neg(idx_));
}

FieldElement FieldElement::inv() const {
    return field_->element(field_->inv(idx_));
}

FieldElement FieldElement::pow(long long e) const {
    return field_->element(field_->pow(idx_, e));
}

}  // namespace supenum
