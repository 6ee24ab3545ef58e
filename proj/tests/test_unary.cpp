#include "doctest.h"

#include <numeric>
#include <random>

#include "mcat/unary.hpp"

#include "oracles.hpp"

using namespace mcat::unary;

namespace {

UnaryLang cyclic_witness(long long n) { // a^{n-1} (a^n)*
    return unary_from_automaton(n, 0, {n - 1});
}

UnaryLang tailed_witness(long long lambda, long long mu) { // a^{mu+lambda-1} (a^lambda)*
    return unary_from_automaton(lambda, mu, {mu + lambda - 1});
}

UnaryLang fold_concat(const std::vector<UnaryLang>& ls) {
    UnaryLang acc = unary_lang_of_lengths({0});
    for (const auto& l : ls) acc = unary_concat(acc, l);
    return acc;
}

std::vector<std::vector<long long>> coprime_tuples(int arity, long long max_elem) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(static_cast<size_t>(arity), 2);
    for (;;) {
        bool sorted = true;
        for (int i = 0; i + 1 < arity; ++i)
            if (cur[static_cast<size_t>(i)] >= cur[static_cast<size_t>(i + 1)]) sorted = false;
        if (sorted) {
            long long g = 0;
            for (long long v : cur) g = std::gcd(g, v);
            if (g == 1) out.push_back(cur);
        }
        int pos = arity - 1;
        while (pos >= 0 && ++cur[static_cast<size_t>(pos)] > max_elem) {
            cur[static_cast<size_t>(pos)] = 2;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("frobenius spot values from the worked identities") {
    CHECK(frobenius({3, 5}) == 7);
    CHECK(frobenius({2, 3}) == 1);
    CHECK(modified_frobenius({3, 5}) == 15);
    CHECK(modified_frobenius({2, 3}) == 6);
    CHECK(modified_frobenius({2, 5}) == 10);
    CHECK(modified_frobenius({6, 10, 15}) == 60);
    CHECK(frobenius({1}) == -1);
    CHECK(frobenius({1, 7}) == -1);
    CHECK(modified_frobenius({3, 1, 3}) == 6);
    CHECK(modified_frobenius({1, 1, 1}) == 2);
    CHECK_THROWS_AS(frobenius({4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(frobenius({0, 3}), std::invalid_argument);
}

TEST_CASE("frobenius equals the sieve on all coprime pairs and triples up to 30") {
    for (const auto& t : coprime_tuples(2, 30))
        REQUIRE(frobenius(t) == oracles::frobenius_sieve(t));
    for (const auto& t : coprime_tuples(3, 30))
        REQUIRE(frobenius(t) == oracles::frobenius_sieve(t));
}

TEST_CASE("every representable sum is a multiple of the gcd; scaling matches") {
    // exhaustive over pairs with entries up to 30, any gcd: the largest
    // unrepresentable multiple of d = gcd is d * g(n/d)
    auto check = [](const std::vector<long long>& nums) {
        long long d = 0;
        for (long long v : nums) d = std::gcd(d, v);
        std::vector<long long> base;
        for (long long v : nums) base.push_back(v / d);
        long long g = frobenius(base);
        long long limit = *std::min_element(nums.begin(), nums.end()) *
                              *std::max_element(nums.begin(), nums.end()) +
                          *std::max_element(nums.begin(), nums.end());
        std::vector<char> rep(static_cast<size_t>(limit + 1), 0);
        rep[0] = 1;
        for (long long v = 1; v <= limit; ++v)
            for (long long a : nums)
                if (v >= a && rep[static_cast<size_t>(v - a)]) {
                    rep[static_cast<size_t>(v)] = 1;
                    break;
                }
        for (long long v = 1; v <= limit; ++v)
            if (rep[static_cast<size_t>(v)]) REQUIRE(v % d == 0);
        long long worst = -1;
        for (long long v = 0; v <= limit; v += d)
            if (!rep[static_cast<size_t>(v)]) worst = v;
        // g = -1 means every multiple of d is representable
        REQUIRE(worst == (g == -1 ? -1 : d * g));
    };
    for (long long a = 1; a <= 30; ++a)
        for (long long b = a; b <= 30; ++b) check({a, b});
    // sampled triples, including non-trivial gcds
    std::mt19937_64 rng(5);
    for (int round = 0; round < 80; ++round) {
        std::vector<long long> t{1 + static_cast<long long>(rng() % 30),
                                 1 + static_cast<long long>(rng() % 30),
                                 1 + static_cast<long long>(rng() % 30)};
        check(t);
    }
}

TEST_CASE("cyclic_concat_size") {
    CHECK(cyclic_concat_size({3, 5}) == UnarySize{1, 14});    // 15 states
    CHECK(cyclic_concat_size({12, 20, 30}) == UnarySize{2, 118}); // 120 states
    CHECK(cyclic_concat_size({4, 6}) == UnarySize{2, 11});
    CHECK(cyclic_concat_size({7}) == UnarySize{7, 0});
    CHECK(cyclic_concat_size({3, 1, 3}) == UnarySize{1, 4});
}

TEST_CASE("unary engine basics") {
    SUBCASE("identity element") {
        UnaryLang eps = unary_lang_of_lengths({0});
        UnaryLang l = cyclic_witness(5);
        CHECK(unary_concat(eps, l) == l);
        CHECK(unary_concat(l, eps) == l);
    }
    SUBCASE("empty language annihilates") {
        UnaryLang empty = unary_lang_of_lengths({});
        UnaryLang l = cyclic_witness(4);
        CHECK(unary_minimal_size(unary_concat(empty, l)) == UnarySize{1, 0});
    }
    SUBCASE("a^2(a^3)* concat a^4(a^5)* stabilizes at 15 states") {
        UnaryLang l = unary_concat(cyclic_witness(3), cyclic_witness(5));
        CHECK(unary_minimal_size(l).states() == 15);
        CHECK(unary_minimal_size(l) == UnarySize{1, 14});
        // tail: nothing below 6 and the Frobenius gap pattern up to g+6=13
        CHECK(!l.accepts(5));
        CHECK(l.accepts(6));  // 2+4 with x=y=0
        CHECK(!l.accepts(13)); // 7 is not 3x+5y
        for (long long t = 14; t < 40; ++t) CHECK(l.accepts(t));
    }
    SUBCASE("canonical sizes") {
        CHECK(unary_minimal_size(unary_from_automaton(1, 0, {0})) == UnarySize{1, 0});
        CHECK(unary_minimal_size(cyclic_witness(6)) == UnarySize{6, 0});
        // {eps} union a^{m-1}(a^{m-2})^* has size (m-2, 2)
        long long m = 9;
        UnaryLang l = unary_from_automaton(m - 2, 2, {0, m - 1});
        CHECK(unary_minimal_size(l) == UnarySize{m - 2, 2});
        // non-minimal automaton canonicalizes: doubled cycle with matching finals
        UnaryLang doubled = unary_from_automaton(12, 0, {5, 11});
        CHECK(unary_minimal_size(doubled) == UnarySize{6, 0});
    }
}

TEST_CASE("cyclic tightness: engine equals the formula for k <= 3, n_i <= 15") {
    for (long long n1 = 1; n1 <= 15; ++n1) {
        auto s = cyclic_concat_size({n1});
        REQUIRE(unary_minimal_size(cyclic_witness(n1)) == s);
    }
    for (long long n1 = 1; n1 <= 15; ++n1)
        for (long long n2 = 1; n2 <= 15; ++n2) {
            auto s = cyclic_concat_size({n1, n2});
            auto l = fold_concat({cyclic_witness(n1), cyclic_witness(n2)});
            REQUIRE(unary_minimal_size(l) == s);
        }
    for (long long n1 = 1; n1 <= 15; n1 += 2)
        for (long long n2 = 2; n2 <= 15; n2 += 3)
            for (long long n3 = 3; n3 <= 15; n3 += 3) {
                auto s = cyclic_concat_size({n1, n2, n3});
                auto l = fold_concat(
                    {cyclic_witness(n1), cyclic_witness(n2), cyclic_witness(n3)});
                REQUIRE(unary_minimal_size(l) == s);
            }
}

TEST_CASE("tailed_cyclic_size and its witnesses") {
    SUBCASE("all mu zero reduces to the cyclic formula") {
        CHECK(tailed_cyclic_size({{3, 0}, {5, 0}}) == cyclic_concat_size({3, 5}));
    }
    SUBCASE("lambda (3,5), mu (2,1)") {
        CHECK(tailed_cyclic_size({{3, 2}, {5, 1}}) == UnarySize{1, 17});
        auto l = fold_concat({tailed_witness(3, 2), tailed_witness(5, 1)});
        CHECK(unary_minimal_size(l) == UnarySize{1, 17});
    }
    SUBCASE("k = 1 identity") {
        CHECK(tailed_cyclic_size({{4, 3}}) == UnarySize{4, 3});
    }
}

TEST_CASE("tailed witnesses meet the formula on the grid") {
    for (long long l1 = 1; l1 <= 10; l1 += 3)
        for (long long m1 = 0; m1 <= 4; m1 += 2)
            for (long long l2 = 2; l2 <= 10; l2 += 4)
                for (long long m2 = 0; m2 <= 4; ++m2) {
                    auto expect = tailed_cyclic_size({{l1, m1}, {l2, m2}});
                    auto got = unary_minimal_size(
                        fold_concat({tailed_witness(l1, m1), tailed_witness(l2, m2)}));
                    REQUIRE(got == expect);
                }
    // a k = 3 sample
    auto expect = tailed_cyclic_size({{3, 2}, {5, 1}, {4, 3}});
    auto got = unary_minimal_size(fold_concat(
        {tailed_witness(3, 2), tailed_witness(5, 1), tailed_witness(4, 3)}));
    CHECK(got == expect);
}

TEST_CASE("tails_final_bound") {
    SUBCASE("the (12,2),(20,2),(30,2) sizes") {
        auto b = tails_final_bound({{12, 2}, {20, 2}, {30, 2}});
        CHECK(b.size == UnarySize{60, 124});
        CHECK(b.maximizing_subsets == std::vector<uint32_t>{7}); // the full set
    }
    SUBCASE("k = 1") {
        auto b = tails_final_bound({{6, 4}});
        CHECK(b.size == UnarySize{6, 4});
    }
    SUBCASE("engine never exceeds the bound on random automata") {
        std::mt19937_64 rng(13);
        for (int round = 0; round < 150; ++round) {
            int k = 1 + static_cast<int>(rng() % 3);
            std::vector<UnarySize> sizes;
            std::vector<UnaryLang> langs;
            for (int i = 0; i < k; ++i) {
                long long lambda = 1 + static_cast<long long>(rng() % 8);
                long long mu = static_cast<long long>(rng() % 4);
                sizes.push_back({lambda, mu});
                std::vector<long long> finals;
                for (long long s = 0; s < lambda + mu; ++s)
                    if (rng() & 1) finals.push_back(s);
                if (finals.empty()) finals.push_back(lambda + mu - 1);
                langs.push_back(unary_from_automaton(lambda, mu, finals));
            }
            auto bound = tails_final_bound(sizes);
            auto got = unary_minimal_size(fold_concat(langs));
            REQUIRE(got.states() <= bound.size.states());
            // the cycle length divides the bound's lcm
            REQUIRE(bound.size.lambda % got.lambda == 0);
        }
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(tails_final_bound(std::vector<UnarySize>(26, {2, 0})),
                        std::invalid_argument);
    }
}

TEST_CASE("the worked tails instance lands exactly on (60,124)") {
    auto l1 = unary_from_automaton(12, 2, {0, 13});
    auto l2 = unary_from_automaton(20, 2, {0, 21});
    auto l3 = unary_from_automaton(30, 2, {0, 31});
    auto l = fold_concat({l1, l2, l3});
    CHECK(unary_minimal_size(l) == UnarySize{60, 124});
}

TEST_CASE("unary_concat is the exact sumset, by definition") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 60; ++round) {
        auto rand_lang = [&]() {
            long long lambda = 1 + static_cast<long long>(rng() % 7);
            long long mu = static_cast<long long>(rng() % 5);
            std::vector<long long> finals;
            for (long long s = 0; s < lambda + mu; ++s)
                if (rng() & 1) finals.push_back(s);
            return unary_from_automaton(lambda, mu, finals);
        };
        UnaryLang a = rand_lang(), b = rand_lang();
        UnaryLang c = unary_concat(a, b);
        long long horizon = a.mu + b.mu + 4 * (a.lambda + b.lambda) * (a.lambda + b.lambda) + 8;
        for (long long x = 0; x <= horizon; ++x) {
            bool direct = false;
            for (long long u = 0; u <= x && !direct; ++u)
                if (a.accepts(u) && b.accepts(x - u)) direct = true;
            REQUIRE(c.accepts(x) == direct);
        }
    }
}

TEST_CASE("unary_concat is associative and commutative up to canonical form") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 80; ++round) {
        auto rand_lang = [&]() {
            long long lambda = 1 + static_cast<long long>(rng() % 6);
            long long mu = static_cast<long long>(rng() % 4);
            std::vector<long long> finals;
            for (long long s = 0; s < lambda + mu; ++s)
                if (rng() & 1) finals.push_back(s);
            return unary_from_automaton(lambda, mu, finals);
        };
        UnaryLang a = rand_lang(), b = rand_lang(), c = rand_lang();
        CHECK(unary_concat(a, b) == unary_concat(b, a));
        CHECK(unary_concat(unary_concat(a, b), c) == unary_concat(a, unary_concat(b, c)));
    }
}

TEST_CASE("split search") {
    SUBCASE("the (471,315) instance") {
        auto rep = search_best_unary_pair(471, 315);
        CHECK(rep.best_i == 1);
        CHECK(rep.best_j == 1);
        CHECK(rep.winner_is_exact);
        CHECK(rep.best_value == 147579); // (m-1)(n-1) - 1 = 2 lcm(470,314) - 1
        CHECK(rep.best_value == 2 * std::lcm(470ll, 314ll) - 1);
        CHECK(rep.runner_up_bound < rep.best_value);
        CHECK(rep.gcd_m_n == 3);
        CHECK(rep.gcd_m_n1 == 157);
        CHECK(rep.gcd_m1_n == 5);
        CHECK(rep.gcd_m2_n == 7);
    }
    SUBCASE("scaled engine confirmation at (13,11)") {
        // gcd(12,10) = 2 and neither divides the other; the two-final-state
        // construction gives 2 lcm(12,10) - 1 = 119 states
        auto l1 = unary_from_automaton(12, 1, {0, 11});
        auto l2 = unary_from_automaton(10, 1, {0, 9});
        auto got = unary_minimal_size(unary_concat(l1, l2));
        CHECK(got.states() == 2 * std::lcm(12ll, 10ll) - 1);
        CHECK(got == UnarySize{60, 59});
    }
    SUBCASE("budget and preconditions") {
        CHECK_THROWS_AS(search_best_unary_pair(5, 300), std::invalid_argument);
        CHECK_THROWS_AS(search_best_unary_pair(30000, 30000), std::invalid_argument);
    }
}

TEST_CASE("unary_concat horizon guard") {
    // coprime cycles just above 3000 push lcm past the 10^7 position guard
    auto a = unary_from_automaton(3163, 0, {0});
    auto b = unary_from_automaton(3167, 0, {0});
    CHECK_THROWS_AS(unary_concat(a, b), HorizonExceeded);
}
