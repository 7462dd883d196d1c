// Linear [n, k] codes: canonical generator matrices, duals, membership and
// deterministic codeword enumeration.
//
// A code's identity is its reduced row echelon generator matrix, so equality
// and self-duality are cheap matrix compares.  Coordinates are 0-indexed
// internally; user-facing reports are 1-indexed.
#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "supenum/linalg.hpp"

namespace supenum {

using Int = boost::multiprecision::cpp_int;

/// Default cap on exhaustive codeword enumeration (q^k), CLI-overridable.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

using Codeword = Vector;

class LinearCode {
  public:
    /// Row space of M with the generator canonicalized to RREF; dependent and
    /// zero rows are permitted and dropped.
    static LinearCode from_generator(const Matrix& m);

    const FieldPtr& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }

    /// Canonical RREF generator, dimension() rows.
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// |C| = q^k, exact.
    Int size() const;

    /// Number of codewords if it fits the cap, otherwise nullopt.
    std::optional<std::uint64_t> size_if_within(std::uint64_t cap) const;

    LinearCode dual() const;

    /// Membership decided by reducing v against the RREF generator.
    bool contains(const Vector& v) const;

    bool is_self_dual() const;

    /// Minimum nonzero codeword weight; requires k >= 1 and q^k <= cap.
    std::size_t min_distance(std::uint64_t cap = kDefaultEnumCap) const;

    /// Invoke fn(word) for each of the q^k codewords, in message-counter
    /// order: the first generator row is the most significant digit, so
    /// binary codes enumerate as messages 00..0, 00..1, 01..0, ...
    template <typename Fn>
    void for_each_codeword(std::uint64_t cap, Fn&& fn) const {
        std::uint64_t total = checked_count(cap);
        const Field& f = *field();
        const unsigned q = f.order();
        const std::size_t k = dimension(), n = length();

        // step[j][d]: change of the word when digit j (controlling generator
        // row k-1-j) moves from scalar index d to d+1 (wrapping to 0), i.e.
        // (elem(d+1 mod q) - elem(d)) * row.  Repeated row addition would
        // only walk the prime subfield, so the deltas are precomputed.
        std::vector<std::vector<std::uint8_t>> step(k * q, std::vector<std::uint8_t>(n));
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t row = k - 1 - j;
            for (unsigned d = 0; d < q; ++d) {
                unsigned delta = f.sub((d + 1) % q, d);
                for (std::size_t i = 0; i < n; ++i)
                    step[j * q + d][i] =
                        static_cast<std::uint8_t>(f.mul(delta, gen_.idx(row, i)));
            }
        }

        std::vector<std::uint8_t> word(n, 0);
        std::vector<std::uint8_t> digit(k, 0);
        Vector view(field(), n);

        for (std::uint64_t c = 0;; ++c) {
            for (std::size_t i = 0; i < n; ++i) view.set_idx(i, word[i]);
            fn(static_cast<const Vector&>(view));
            if (c + 1 == total) break;

            std::size_t j = 0;
            for (;;) {
                const auto& delta = step[j * q + digit[j]];
                for (std::size_t i = 0; i < n; ++i)
                    word[i] = static_cast<std::uint8_t>(f.add(word[i], delta[i]));
                if (++digit[j] < q) break;
                digit[j] = 0;
                ++j;
            }
        }
    }

    /// Materialized codeword list; intended for small codes (tests, reports).
    std::vector<Vector> codewords(std::uint64_t cap = kDefaultEnumCap) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.gen_ == b.gen_;
    }

  private:
    explicit LinearCode(RrefResult canon)
        : gen_(std::move(canon.reduced)), pivots_(std::move(canon.pivots)) {}

    /// q^k if <= cap, else throws EnumerationTooLarge.
    std::uint64_t checked_count(std::uint64_t cap) const;

    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

/// Classification of coordinate i by where the standard basis vector e_i
/// lives relative to C and its dual.
enum class CoordClass : std::uint8_t {
    kBoth,      // e_i in C and in the dual (impossible: e_i . e_i != 0)
    kCodeOnly,  // e_i in C only
    kDualOnly,  // e_i in the dual only
    kNeither,   // e_i outside both
};

struct BasisPartition {
    std::vector<CoordClass> labels;  // one per coordinate, 0-indexed

    /// 0-based coordinates with the given label.
    std::vector<std::size_t> coords(CoordClass c) const;
};

/// Classify every coordinate of C; the four classes partition [0, n).
BasisPartition standard_basis_partition(const LinearCode& code);

/// e_i as a Vector of length n over the given field.
Vector standard_basis_vector(const FieldPtr& field, std::size_t n, std::size_t i);

}  // namespace supenum
