#include <doctest.h>

#include <set>

#include "supenum/enumerator.hpp"
#include "supenum/families.hpp"

using namespace supenum;

namespace {

std::string to_string(const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<char>('0' + v.idx(i));
    return s;
}

}  // namespace

TEST_CASE("simplex parameters and uniform support") {
    struct Case {
        unsigned q, m;
        std::size_t n;
        long long s;  // q^(m-1) (q-1)
    };
    for (auto [q, m, n, s] : {Case{2, 2, 3, 2}, Case{2, 3, 7, 4}, Case{2, 4, 15, 8},
                              Case{3, 2, 4, 6}, Case{3, 3, 13, 18}, Case{4, 2, 5, 12},
                              Case{5, 2, 6, 20}}) {
        CAPTURE(q);
        CAPTURE(m);
        LinearCode c = simplex(Field::of_order(q), m);
        CHECK(c.length() == n);
        CHECK(c.dimension() == m);
        SupportDistribution sd = support_distribution_enum(c);
        for (const auto& v : sd.counts) CHECK(v == s);
    }
}

TEST_CASE("simplex nonzero codewords all have the same weight") {
    LinearCode c = simplex(Field::of_order(3), 2);
    WeightDistribution w = weight_distribution(c);
    CHECK(w.counts[0] == 1);
    CHECK(w.counts[3] == 8);  // all 8 nonzero words have weight q^(m-1) = 3
    Int rest = 0;
    for (std::size_t i = 1; i < w.counts.size(); ++i)
        if (i != 3) rest += w.counts[i];
    CHECK(rest == 0);
}

TEST_CASE("simplex rejects bad parameters") {
    CHECK_THROWS_AS(simplex(Field::of_order(2), 1), UnsupportedParameters);
    CHECK_THROWS_AS(simplex(Field::of_order(5), 11), UnsupportedParameters);  // 5^11 too big
}

TEST_CASE("hamming is the dual of simplex with distance 3") {
    LinearCode h = hamming(Field::of_order(2), 3);
    CHECK(h.length() == 7);
    CHECK(h.dimension() == 4);
    CHECK(h.min_distance() == 3);
    CHECK(h.dual() == simplex(Field::of_order(2), 3));

    // (2,2): dual of the [3,2] simplex is the [3,1] repetition code
    CHECK(hamming(Field::of_order(2), 2) == repetition(Field::of_order(2), 3));

    CHECK(hamming(Field::of_order(3), 2).min_distance() == 3);
}

TEST_CASE("repetition codes") {
    LinearCode rep = repetition(Field::of_order(2), 3);
    std::set<std::string> words;
    for (const auto& w : rep.codewords()) words.insert(to_string(w));
    CHECK(words == std::set<std::string>{"000", "111"});

    CHECK(repetition(Field::of_order(2), 1).size() == 2);  // the whole line F_2

    std::set<std::string> trits;
    for (const auto& w : repetition(Field::of_order(3), 2).codewords())
        trits.insert(to_string(w));
    CHECK(trits == std::set<std::string>{"00", "11", "22"});

    CHECK_THROWS_AS(repetition(Field::of_order(2), 0), UnsupportedParameters);
}

TEST_CASE("extended Hamming code properties") {
    LinearCode c = extended_hamming_8_4();
    CHECK(c.length() == 8);
    CHECK(c.dimension() == 4);
    CHECK(c.is_self_dual());
    CHECK(c.min_distance() == 4);

    std::set<std::string> words;
    for (const auto& w : c.codewords()) words.insert(to_string(w));
    CHECK(words.count("11110000") == 1);
    CHECK(words.count("10101010") == 1);

    CHECK(weight_distribution(c).counts ==
          std::vector<Int>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    for (const auto& s : support_distribution_enum(c).counts) CHECK(s == 8);

    CHECK(verify_self_dual_criterion(c).criterion_holds);
}
