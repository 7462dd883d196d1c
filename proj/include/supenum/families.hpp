// Constructors for the classical code families used as golden fixtures:
// simplex, Hamming, repetition, and the self-dual [8,4,4] extended Hamming
// code.  All constructors are deterministic.
#pragma once

#include "supenum/code.hpp"

namespace supenum {

/// The [(q^m-1)/(q-1), m] simplex code, m >= 2.  Generator columns are one
/// representative per projective point (the scalar multiple with leading
/// coefficient 1, i.e. the lexicographically smallest), in lexicographic
/// column order; the result is then canonicalized like any other code.
/// Every nonzero codeword has weight q^(m-1), which is asserted when the
/// code is enumerable.
LinearCode simplex(const FieldPtr& field, unsigned m, std::uint64_t cap = kDefaultEnumCap);

/// The [n, n-m, 3] Hamming code, as the dual of the simplex code.
LinearCode hamming(const FieldPtr& field, unsigned m, std::uint64_t cap = kDefaultEnumCap);

/// The [n, 1] repetition code: all scalar multiples of the all-ones word.
LinearCode repetition(const FieldPtr& field, std::size_t n);

/// The binary self-dual [8,4,4] extended Hamming code.
LinearCode extended_hamming_8_4();

}  // namespace supenum
