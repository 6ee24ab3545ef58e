// Acceptance suite: one criterion per case, one PASS/FAIL line each.
// Exits non-zero when any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "mcat/bounds.hpp"
#include "mcat/concat.hpp"
#include "mcat/unary.hpp"
#include "mcat/verify.hpp"
#include "mcat/witness.hpp"

using namespace mcat;
using bounds::BigInt;
using bounds::SizeVector;

namespace {

struct Criterion {
    int id;
    long long budget_ms; // wall-clock limit, part of the criterion
    std::string title;
    std::function<void(std::ostream&)> run; // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", want " << want;
        throw Failure(msg.str());
    }
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::vector<SizeVector> grid(int k, int lo, int hi) {
    std::vector<SizeVector> out;
    std::vector<int> cur(static_cast<size_t>(k), lo);
    for (;;) {
        out.push_back(SizeVector{cur});
        int pos = 0;
        while (pos < k && ++cur[static_cast<size_t>(pos)] > hi) {
            cur[static_cast<size_t>(pos)] = lo;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

int minimal_of(const std::vector<Dfa>& dfas) {
    return run_concat_pipeline(dfas).minimal;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, 10000, "recursion equals enumeration on the k=2..4, n_i=2..4 grid",
        [](std::ostream& out) {
            int cases = 0;
            for (int k = 2; k <= 4; ++k)
                for (const auto& n : grid(k, 2, 4)) {
                    expect_eq(bounds::count_valid_states(n).tau,
                              bounds::enumerate_valid_states(n),
                              "tau(" + bounds::to_string(n) + ")");
                    ++cases;
                }
            out << cases << " size vectors";
        }});

    criteria.push_back({2, 1000, "k=2 closed form (n1-1)2^{n2}+2^{n2-1} for n1,n2 in [2,10]",
        [](std::ostream& out) {
            for (int n1 = 2; n1 <= 10; ++n1)
                for (int n2 = 2; n2 <= 10; ++n2) {
                    BigInt closed = BigInt(n1 - 1) * (BigInt(1) << n2) +
                                    (BigInt(1) << (n2 - 1));
                    expect_eq(bounds::count_valid_states(SizeVector{{n1, n2}}).tau, closed,
                              "tau(" + std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
            out << "81 pairs";
        }});

    criteria.push_back({3, 5000, "binary k=2 tightness for n1,n2 in [1,5]",
        [](std::ostream& out) {
            for (int n1 = 1; n1 <= 5; ++n1)
                for (int n2 = 1; n2 <= 5; ++n2) {
                    auto [a, b] = witness::gen_binary_k2(n1, n2);
                    BigInt want;
                    if (n2 == 1)
                        want = n1;
                    else if (n1 == 1)
                        want = BigInt(1) << (n2 - 1);
                    else
                        want = BigInt(n1 - 1) * (BigInt(1) << n2) + (BigInt(1) << (n2 - 1));
                    expect_eq(BigInt(minimal_of({a, b})), want,
                              "minimal(" + std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
            out << "25 pairs";
        }});

    criteria.push_back({4, 120000, "(k+1)-letter witnesses: 106 / 226 / 570",
        [](std::ostream& out) {
            struct Case { SizeVector n; int want; };
            for (const auto& c : {Case{SizeVector{{3, 3, 3}}, 106},
                                  Case{SizeVector{{3, 4, 3}}, 226},
                                  Case{SizeVector{{3, 3, 3, 3}}, 570}}) {
                expect_eq(bounds::count_valid_states(c.n).tau, BigInt(c.want),
                          "tau(" + bounds::to_string(c.n) + ")");
                expect_eq(minimal_of(witness::gen_kp1(c.n)), c.want,
                          "minimal kp1(" + bounds::to_string(c.n) + ")");
            }
            out << "3 instances";
        }});

    criteria.push_back({5, 120000, "two-state-inclusive (k+1)-letter witnesses: (2,2,2) and (3,2,3,2,2)",
        [](std::ostream& out) {
            expect_eq(minimal_of(witness::gen_kp1_two(SizeVector{{2, 2, 2}})), 15,
                      "minimal kp1-two(2,2,2)");
            SizeVector fig8{{3, 2, 3, 2, 2}};
            BigInt tau = bounds::count_valid_states(fig8).tau;
            expect_eq(tau, BigInt(308), "tau(3,2,3,2,2)");
            expect_eq(BigInt(minimal_of(witness::gen_kp1_two(fig8))), tau,
                      "minimal kp1-two(3,2,3,2,2)");
            out << "tau(3,2,3,2,2) = " << tau;
        }});

    criteria.push_back({6, 120000, "k-letter witnesses: (2,3,2) -> 33 and (2,3,3,2) -> 178",
        [](std::ostream&) {
            expect_eq(minimal_of(witness::gen_k(SizeVector{{2, 3, 2}})), 33,
                      "minimal kletter(2,3,2)");
            expect_eq(bounds::count_valid_states(SizeVector{{2, 3, 2}}).tau, BigInt(33),
                      "tau(2,3,2)");
            expect_eq(minimal_of(witness::gen_k(SizeVector{{2, 3, 3, 2}})), 178,
                      "minimal kletter(2,3,3,2)");
            expect_eq(bounds::count_valid_states(SizeVector{{2, 3, 3, 2}}).tau, BigInt(178),
                      "tau(2,3,3,2)");
        }});

    criteria.push_back({7, 60000, "all-two-state k-letter family: 15 / 37 / 90",
        [](std::ostream&) {
            struct Case { int k; int want; };
            for (const auto& c : {Case{3, 15}, Case{4, 37}, Case{5, 90}}) {
                SizeVector n{std::vector<int>(static_cast<size_t>(c.k), 2)};
                expect_eq(bounds::count_valid_states(n).tau, BigInt(c.want),
                          "tau(k=" + std::to_string(c.k) + ")");
                expect_eq(minimal_of(witness::gen_k_twostate(c.k)), c.want,
                          "minimal 2-state k=" + std::to_string(c.k));
            }
        }});

    criteria.push_back({8, 300000, "ternary optimality at (2,2,2): exhaustive max < 15",
        [](std::ostream& out) {
            auto rep = witness::check_ternary_optimality_k3();
            expect_eq(rep.cases, 4096, "triples examined");
            expect(rep.max_minimal < 15, "a binary triple reached 15 states");
            expect(rep.some_case_at_least_8, "no binary triple reached 8 states");
            out << "max over 4096 triples = " << rep.max_minimal;
        }});

    criteria.push_back({9, 1000, "k=5 one-state example: pipeline and interval bound give 14",
        [](std::ostream&) {
            expect_eq(bounds::interval_bound(SizeVector{{3, 3, 1, 1, 3}}), BigInt(14),
                      "interval bound");
            expect_eq(minimal_of(witness::gen_example_k5_14()), 14, "minimal");
        }});

    criteria.push_back({10, 60000, "lower bounds at (3,4,3): binary >= 10, ternary >= 24",
        [](std::ostream& out) {
            SizeVector n{{3, 4, 3}};
            BigInt blb = bounds::binary_lower_bound(n);
            expect_eq(blb, BigInt(10), "binary bound value");
            int bgot = minimal_of(witness::gen_binary_lb(n));
            expect(BigInt(bgot) >= blb, "binary family under its bound");
            BigInt tlb = bounds::ternary_lower_bound(n);
            expect_eq(tlb, BigInt(24), "ternary bound value");
            int tgot = minimal_of(witness::gen_ternary_lb(n));
            expect(BigInt(tgot) >= tlb, "ternary family under its bound");
            out << "binary " << bgot << " >= 10, ternary " << tgot << " >= 24";
        }});

    criteria.push_back({11, 1000, "sandwich bounds bracket tau on the k=3,4 grid",
        [](std::ostream& out) {
            int cases = 0;
            for (int k = 3; k <= 4; ++k)
                for (const auto& n : grid(k, 2, 4)) {
                    auto [lo, hi] = bounds::sandwich_bounds(n);
                    BigInt tau = bounds::count_valid_states(n).tau;
                    expect(lo <= tau && tau <= hi,
                           "sandwich violated at " + bounds::to_string(n));
                    ++cases;
                }
            out << cases << " size vectors";
        }});

    criteria.push_back({12, 10000, "Frobenius: sieve agreement up to 30, spot identities",
        [](std::ostream& out) {
            // sieve oracle inline to stay self-contained
            auto sieve = [](const std::vector<long long>& nums) {
                long long lo = *std::min_element(nums.begin(), nums.end());
                long long hi = *std::max_element(nums.begin(), nums.end());
                long long limit = lo * hi + hi + 1;
                std::vector<char> rep(static_cast<size_t>(limit + 1), 0);
                rep[0] = 1;
                for (long long v = 1; v <= limit; ++v)
                    for (long long a : nums)
                        if (v >= a && rep[static_cast<size_t>(v - a)]) {
                            rep[static_cast<size_t>(v)] = 1;
                            break;
                        }
                long long g = -1;
                for (long long v = 0; v <= limit; ++v)
                    if (!rep[static_cast<size_t>(v)]) g = v;
                return g;
            };
            int pairs = 0, triples = 0;
            for (long long a = 2; a <= 30; ++a)
                for (long long b = a + 1; b <= 30; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    expect_eq(unary::frobenius({a, b}), sieve({a, b}),
                              "g(" + std::to_string(a) + "," + std::to_string(b) + ")");
                    ++pairs;
                }
            for (long long a = 2; a <= 30; ++a)
                for (long long b = a + 1; b <= 30; ++b)
                    for (long long c = b + 1; c <= 30; ++c) {
                        if (std::gcd(std::gcd(a, b), c) != 1) continue;
                        expect_eq(unary::frobenius({a, b, c}), sieve({a, b, c}),
                                  "g(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
                        ++triples;
                    }
            expect_eq(unary::frobenius({3, 5}), 7ll, "g(3,5)");
            expect_eq(unary::frobenius({2, 3}), 1ll, "g(2,3)");
            expect_eq(unary::modified_frobenius({6, 10, 15}), 60ll, "f(6,10,15)");
            out << pairs << " pairs, " << triples << " triples";
        }});

    criteria.push_back({13, 30000, "cyclic unary tightness for k <= 3, n_i <= 15",
        [](std::ostream& out) {
            auto witness_lang = [](long long n) {
                return unary::unary_from_automaton(n, 0, {n - 1});
            };
            int cases = 0;
            for (long long n1 = 1; n1 <= 15; ++n1) {
                expect_eq(unary::unary_minimal_size(witness_lang(n1)) ==
                              unary::cyclic_concat_size({n1}),
                          true, "k=1 n=" + std::to_string(n1));
                ++cases;
            }
            for (long long n1 = 1; n1 <= 15; ++n1)
                for (long long n2 = 1; n2 <= 15; ++n2) {
                    auto l = unary::unary_concat(witness_lang(n1), witness_lang(n2));
                    expect(unary::unary_minimal_size(l) == unary::cyclic_concat_size({n1, n2}),
                           "k=2 mismatch at " + std::to_string(n1) + "," + std::to_string(n2));
                    ++cases;
                }
            for (long long n1 = 1; n1 <= 15; ++n1)
                for (long long n2 = 1; n2 <= 15; ++n2)
                    for (long long n3 = 1; n3 <= 15; ++n3) {
                        auto l = unary::unary_concat(
                            unary::unary_concat(witness_lang(n1), witness_lang(n2)),
                            witness_lang(n3));
                        expect(unary::unary_minimal_size(l) ==
                                   unary::cyclic_concat_size({n1, n2, n3}),
                               "k=3 mismatch at " + std::to_string(n1) + "," +
                                   std::to_string(n2) + "," + std::to_string(n3));
                        ++cases;
                    }
            out << cases << " size vectors";
        }});

    criteria.push_back({14, 30000, "tailed cyclic tightness: lambda <= 10, mu <= 4, k <= 3",
        [](std::ostream& out) {
            auto witness_lang = [](long long lambda, long long mu) {
                return unary::unary_from_automaton(lambda, mu, {mu + lambda - 1});
            };
            int cases = 0;
            for (long long l1 = 1; l1 <= 10; ++l1)
                for (long long m1 = 0; m1 <= 4; ++m1) {
                    expect(unary::unary_minimal_size(witness_lang(l1, m1)) ==
                               unary::tailed_cyclic_size({{l1, m1}}),
                           "k=1 mismatch");
                    ++cases;
                }
            for (long long l1 = 1; l1 <= 10; ++l1)
                for (long long m1 = 0; m1 <= 4; m1 += 2)
                    for (long long l2 = 1; l2 <= 10; l2 += 3)
                        for (long long m2 = 0; m2 <= 4; m2 += 2) {
                            auto l = unary::unary_concat(witness_lang(l1, m1),
                                                         witness_lang(l2, m2));
                            expect(unary::unary_minimal_size(l) ==
                                       unary::tailed_cyclic_size({{l1, m1}, {l2, m2}}),
                                   "k=2 mismatch");
                            ++cases;
                        }
            for (long long l1 = 1; l1 <= 10; l1 += 4)
                for (long long l2 = 2; l2 <= 10; l2 += 4)
                    for (long long l3 = 3; l3 <= 10; l3 += 3)
                        for (long long m = 0; m <= 4; m += 2) {
                            auto l = unary::unary_concat(
                                unary::unary_concat(witness_lang(l1, m), witness_lang(l2, 1)),
                                witness_lang(l3, m));
                            expect(unary::unary_minimal_size(l) ==
                                       unary::tailed_cyclic_size(
                                           {{l1, m}, {l2, 1}, {l3, m}}),
                                   "k=3 mismatch");
                            ++cases;
                        }
            out << cases << " size tuples";
        }});

    criteria.push_back({15, 10000, "the (12,2),(20,2),(30,2) instance lands on (60,124)",
        [](std::ostream&) {
            auto l = unary::unary_concat(
                unary::unary_concat(unary::unary_from_automaton(12, 2, {0, 13}),
                                    unary::unary_from_automaton(20, 2, {0, 21})),
                unary::unary_from_automaton(30, 2, {0, 31}));
            auto size = unary::unary_minimal_size(l);
            expect(size == unary::UnarySize{60, 124},
                   "engine size (" + std::to_string(size.lambda) + "," +
                       std::to_string(size.mu) + ") != (60,124)");
            auto bound = unary::tails_final_bound({{12, 2}, {20, 2}, {30, 2}});
            expect(bound.size == unary::UnarySize{60, 124}, "formula bound != (60,124)");
        }});

    criteria.push_back({16, 30000, "471/315 split search and the scaled engine analog",
        [](std::ostream& out) {
            auto rep = unary::search_best_unary_pair(471, 315);
            expect(rep.best_i == 1 && rep.best_j == 1, "winning split is not (470,1),(314,1)");
            expect(rep.winner_is_exact, "winner not backed by the exact construction");
            expect_eq(rep.best_value, 470ll * 314 - 1, "winning value");
            // scaled analog: m=13, n=11, gcd(12,10)=2, neither divides the other
            auto got = unary::unary_minimal_size(
                unary::unary_concat(unary::unary_from_automaton(12, 1, {0, 11}),
                                    unary::unary_from_automaton(10, 1, {0, 9})));
            expect_eq(got.states(), 2 * std::lcm(12ll, 10ll) - 1, "scaled engine states");
            out << "winner (470,1),(314,1) at " << rep.best_value;
        }});

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool ok = true;
        std::string why;
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (ok && ms > c.budget_ms) {
            ok = false;
            why = "took " + std::to_string(ms) + " ms, budget " +
                  std::to_string(c.budget_ms) + " ms";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
        if (ok && detail.str().size()) std::cout << " (" << detail.str() << ")";
        if (!ok) std::cout << " -- " << why;
        std::cout << " [" << ms << " ms, budget " << c.budget_ms << " ms]\n";
        if (!ok) ++failed;
    }
    if (failed) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
