#include "supenum/families.hpp"

#include <algorithm>
#include <string>

#include "supenum/enumerator.hpp"

namespace supenum {

LinearCode simplex(const FieldPtr& field, unsigned m, std::uint64_t cap) {
    if (m < 2) throw UnsupportedParameters("simplex requires m >= 2");
    const unsigned q = field->order();
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) {
        qm *= q;
        if (qm > cap)
            throw UnsupportedParameters("simplex parameters give q^m above the enumeration cap");
    }
    const std::size_t n = static_cast<std::size_t>((qm - 1) / (q - 1));

    // normalized projective representatives: first nonzero digit equals 1;
    // digit 0 is the top row, compared first
    std::vector<std::vector<std::uint8_t>> cols;
    std::vector<std::uint8_t> v(m, 0);
    for (std::uint64_t code = 1; code < qm; ++code) {
        // next vector in lexicographic order over (v[0], ..., v[m-1])
        for (unsigned i = m; i-- > 0;) {
            if (v[i] + 1u < q) {
                ++v[i];
                std::fill(v.begin() + i + 1, v.end(), 0);
                break;
            }
        }
        unsigned lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] == 1) cols.push_back(v);
    }
    if (cols.size() != n) throw std::logic_error("projective point count mismatch");

    Matrix g(field, m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (unsigned r = 0; r < m; ++r) g.set_idx(r, c, cols[c][r]);

    LinearCode code = LinearCode::from_generator(g);
    WeightDistribution w = weight_distribution(code, cap);
    for (std::size_t wt = 1; wt < w.counts.size(); ++wt) {
        std::uint64_t expected_weight = qm / q;  // q^(m-1)
        if (w.counts[wt] != 0 && wt != expected_weight)
            throw std::logic_error("simplex codeword of unexpected weight " + std::to_string(wt));
    }
    return code;
}

LinearCode hamming(const FieldPtr& field, unsigned m, std::uint64_t cap) {
    LinearCode h = simplex(field, m, cap).dual();
    if (h.size_if_within(cap) && h.min_distance(cap) != 3)
        throw std::logic_error("hamming code does not have minimum distance 3");
    return h;
}

LinearCode repetition(const FieldPtr& field, std::size_t n) {
    if (n < 1) throw UnsupportedParameters("repetition requires n >= 1");
    Matrix g(field, 1, n);
    for (std::size_t c = 0; c < n; ++c) g.set_idx(0, c, 1);
    return LinearCode::from_generator(g);
}

LinearCode extended_hamming_8_4() {
    FieldPtr f2 = Field::make(2, 1);
    Matrix g = Matrix::from_rows(f2, {
                                         {1, 1, 1, 1, 0, 0, 0, 0},
                                         {1, 1, 0, 0, 1, 1, 0, 0},
                                         {1, 0, 1, 0, 1, 0, 1, 0},
                                         {1, 0, 0, 1, 1, 0, 0, 1},
                                     });
    LinearCode code = LinearCode::from_generator(g);
    if (!code.is_self_dual()) throw std::logic_error("extended Hamming code must be self-dual");
    return code;
}

}  // namespace supenum
