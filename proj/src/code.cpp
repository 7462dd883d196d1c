#include "supenum/code.hpp"

#include <string>

namespace supenum {

LinearCode LinearCode::from_generator(const Matrix& m) {
    return LinearCode(rref(m));
}

Int LinearCode::size() const {
    Int s = 1;
    for (std::size_t i = 0; i < dimension(); ++i) s *= field()->order();
    return s;
}

std::optional<std::uint64_t> LinearCode::size_if_within(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (count > cap / field()->order()) return std::nullopt;
        count *= field()->order();
    }
    if (count > cap) return std::nullopt;
    return count;
}

std::uint64_t LinearCode::checked_count(std::uint64_t cap) const {
    auto count = size_if_within(cap);
    if (!count)
        throw EnumerationTooLarge("code has " + std::to_string(field()->order()) + "^" +
                                  std::to_string(dimension()) +
                                  " codewords, above the enumeration cap " + std::to_string(cap));
    return *count;
}

LinearCode LinearCode::dual() const {
    return from_generator(nullspace_basis(gen_));
}

bool LinearCode::contains(const Vector& v) const {
    if (!same_field(v.field(), field())) throw FieldMismatch("membership test across fields");
    if (v.size() != length()) throw DimensionMismatch("membership test length mismatch");
    const Field& f = *field();
    std::vector<std::uint8_t> residual = v.indices();
    for (std::size_t r = 0; r < dimension(); ++r) {
        unsigned coeff = residual[pivots_[r]];
        if (coeff == 0) continue;
        for (std::size_t c = pivots_[r]; c < length(); ++c)
            residual[c] = static_cast<std::uint8_t>(f.sub(residual[c], f.mul(coeff, gen_.idx(r, c))));
    }
    for (auto x : residual)
        if (x != 0) return false;
    return true;
}

bool LinearCode::is_self_dual() const {
    if (2 * dimension() != length()) return false;
    return dual() == *this;
}

std::size_t LinearCode::min_distance(std::uint64_t cap) const {
    if (dimension() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
    std::size_t best = length() + 1;
    for_each_codeword(cap, [&](const Vector& w) {
        std::size_t wt = w.weight();
        if (wt != 0 && wt < best) best = wt;
    });
    return best;
}

std::vector<Vector> LinearCode::codewords(std::uint64_t cap) const {
    std::vector<Vector> words;
    auto count = checked_count(cap);
    words.reserve(static_cast<std::size_t>(count));
    for_each_codeword(cap, [&](const Vector& w) { words.push_back(w); });
    return words;
}

std::vector<std::size_t> BasisPartition::coords(CoordClass c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == c) out.push_back(i);
    return out;
}

BasisPartition standard_basis_partition(const LinearCode& code) {
    LinearCode dual = code.dual();
    BasisPartition part;
    part.labels.resize(code.length());
    for (std::size_t i = 0; i < code.length(); ++i) {
        Vector e = standard_basis_vector(code.field(), code.length(), i);
        bool in_code = code.contains(e);
        bool in_dual = dual.contains(e);
        part.labels[i] = in_code ? (in_dual ? CoordClass::kBoth : CoordClass::kCodeOnly)
                                 : (in_dual ? CoordClass::kDualOnly : CoordClass::kNeither);
    }
    return part;
}

Vector standard_basis_vector(const FieldPtr& field, std::size_t n, std::size_t i) {
    Vector e(field, n);
    e.set_idx(i, 1);
    return e;
}

}  // namespace supenum
