#include "mcat/unary.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace mcat::unary {

namespace {

long long gcd_all(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

void require(bool ok, const std::string& clause) {
    if (!ok) throw std::invalid_argument("unary: " + clause);
}

} // namespace

long long frobenius(std::vector<long long> nums) {
    require(!nums.empty(), "frobenius needs at least one number");
    for (long long v : nums) require(v >= 1, "frobenius needs positive numbers");
    require(gcd_all(nums) == 1, "frobenius needs gcd = 1");

    long long base = *std::min_element(nums.begin(), nums.end());
    if (base == 1) return -1;

    // smallest representable value in each residue class mod base
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dist(static_cast<size_t>(base), inf);
    dist[0] = 0;
    using Node = std::pair<long long, long long>; // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d > dist[static_cast<size_t>(r)]) continue;
        for (long long a : nums) {
            long long nr = (r + a) % base;
            if (d + a < dist[static_cast<size_t>(nr)]) {
                dist[static_cast<size_t>(nr)] = d + a;
                pq.emplace(d + a, nr);
            }
        }
    }
    long long worst = 0;
    for (long long d : dist) worst = std::max(worst, d);
    return worst - base;
}

long long modified_frobenius(const std::vector<long long>& nums) {
    long long g = frobenius(nums);
    long long sum = 0;
    for (long long v : nums) sum += v;
    return g + sum;
}

UnarySize cyclic_concat_size(const std::vector<long long>& n) {
    require(!n.empty(), "cyclic_concat_size needs k >= 1");
    for (long long v : n) require(v >= 1, "cyclic_concat_size needs n_i >= 1");
    long long d = gcd_all(n);
    std::vector<long long> scaled;
    scaled.reserve(n.size());
    for (long long v : n) scaled.push_back(v / d);
    long long f = modified_frobenius(scaled);
    return {d, d * f - static_cast<long long>(n.size()) + 1};
}

UnarySize tailed_cyclic_size(const std::vector<UnarySize>& sizes) {
    require(!sizes.empty(), "tailed_cyclic_size needs k >= 1");
    std::vector<long long> lambdas;
    long long mu_sum = 0;
    for (const auto& s : sizes) {
        require(s.lambda >= 1 && s.mu >= 0, "sizes need lambda >= 1, mu >= 0");
        lambdas.push_back(s.lambda);
        mu_sum += s.mu;
    }
    UnarySize cyc = cyclic_concat_size(lambdas);
    return {cyc.lambda, mu_sum + cyc.mu};
}

TailsBound tails_final_bound(const std::vector<UnarySize>& sizes) {
    const int k = static_cast<int>(sizes.size());
    require(k >= 1, "tails_final_bound needs k >= 1");
    require(k <= 25, "tails_final_bound guard: k <= 25");

    long long lambda = 1;
    long long mu_sum = 0;
    for (const auto& s : sizes) {
        require(s.lambda >= 1 && s.mu >= 0, "sizes need lambda >= 1, mu >= 0");
        lambda = lcm_ll(lambda, s.lambda);
        mu_sum += s.mu;
    }

    long long best = std::numeric_limits<long long>::min();
    std::vector<uint32_t> argmax;
    for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
        long long term;
        if (mask == 0) {
            term = 0; // d = 1, f(empty) = 0
        } else {
            std::vector<long long> sel;
            for (int i = 0; i < k; ++i)
                if (mask & (uint32_t{1} << i)) sel.push_back(sizes[static_cast<size_t>(i)].lambda);
            long long d = gcd_all(sel);
            for (auto& v : sel) v /= d;
            term = d * modified_frobenius(sel);
        }
        if (term > best) {
            best = term;
            argmax.assign(1, mask);
        } else if (term == best) {
            argmax.push_back(mask);
        }
    }
    TailsBound out;
    out.size = {lambda, mu_sum - k + 1 + best};
    out.maximizing_subsets = std::move(argmax);
    return out;
}

namespace {

constexpr long long kHorizonGuard = 10'000'000;

// canonicalize a bit table known to be `period`-periodic from `stable` on;
// the table must extend to at least stable + 2 * period
UnaryLang canonicalize(const std::vector<char>& bits, long long stable, long long period) {
    for (long long t = stable; t + period < static_cast<long long>(bits.size()); ++t)
        if (bits[static_cast<size_t>(t)] != bits[static_cast<size_t>(t + period)])
            throw std::logic_error("unary: steady state not periodic at the horizon");

    // smallest divisor of the period that already repeats
    long long lambda = period;
    for (long long p = 1; p <= period; ++p) {
        if (period % p) continue;
        bool ok = true;
        for (long long t = stable; t < stable + period && ok; ++t)
            if (bits[static_cast<size_t>(t)] != bits[static_cast<size_t>(t + p)]) ok = false;
        if (ok) {
            lambda = p;
            break;
        }
    }

    long long mu = stable;
    while (mu > 0 &&
           bits[static_cast<size_t>(mu - 1)] == bits[static_cast<size_t>(mu - 1 + lambda)])
        --mu;

    UnaryLang out;
    out.lambda = lambda;
    out.mu = mu;
    out.tail.assign(bits.begin(), bits.begin() + mu);
    out.cycle.assign(bits.begin() + mu, bits.begin() + mu + lambda);
    return out;
}

std::vector<char> materialize(const UnaryLang& l, long long horizon) {
    std::vector<char> bits(static_cast<size_t>(horizon), 0);
    for (long long t = 0; t < horizon; ++t)
        bits[static_cast<size_t>(t)] = l.accepts(t) ? 1 : 0;
    return bits;
}

} // namespace

UnaryLang unary_from_automaton(long long lambda, long long mu,
                               const std::vector<long long>& finals) {
    require(lambda >= 1 && mu >= 0, "automaton size needs lambda >= 1, mu >= 0");
    UnaryLang raw;
    raw.lambda = lambda;
    raw.mu = mu;
    raw.tail.assign(static_cast<size_t>(mu), 0);
    raw.cycle.assign(static_cast<size_t>(lambda), 0);
    for (long long f : finals) {
        require(f >= 0 && f < lambda + mu, "final state out of range");
        if (f < mu)
            raw.tail[static_cast<size_t>(f)] = 1;
        else
            raw.cycle[static_cast<size_t>(f - mu)] = 1;
    }
    return canonicalize(materialize(raw, mu + 2 * lambda), mu, lambda);
}

UnaryLang unary_lang_of_lengths(const std::vector<long long>& lengths) {
    long long top = 0;
    for (long long v : lengths) {
        require(v >= 0, "lengths must be non-negative");
        top = std::max(top, v + 1);
    }
    UnaryLang raw;
    raw.lambda = 1;
    raw.mu = top;
    raw.tail.assign(static_cast<size_t>(top), 0);
    raw.cycle.assign(1, 0);
    for (long long v : lengths) raw.tail[static_cast<size_t>(v)] = 1;
    return canonicalize(materialize(raw, top + 2), top, 1);
}

UnaryLang unary_concat(const UnaryLang& a, const UnaryLang& b) {
    auto nonempty = [](const UnaryLang& l) {
        return std::count(l.tail.begin(), l.tail.end(), 1) ||
               std::count(l.cycle.begin(), l.cycle.end(), 1);
    };
    if (!nonempty(a) || !nonempty(b)) { // empty concat anything = empty
        UnaryLang empty;
        empty.lambda = 1;
        empty.mu = 0;
        empty.cycle.assign(1, 0);
        return empty;
    }

    long long d = std::gcd(a.lambda, b.lambda);
    long long ell = lcm_ll(a.lambda, b.lambda);
    long long gap = frobenius({a.lambda / d, b.lambda / d}); // -1 when a cycle divides
    long long stable = a.mu + b.mu + a.lambda + b.lambda + d * (gap + 1) + 1;
    long long horizon = stable + 2 * ell;
    if (horizon > kHorizonGuard)
        throw HorizonExceeded("unary_concat horizon " + std::to_string(horizon) +
                              " exceeds guard " + std::to_string(kHorizonGuard));

    // sumset via shifted word-parallel OR
    const size_t words = static_cast<size_t>((horizon + 63) / 64);
    std::vector<uint64_t> bw(words, 0), out(words, 0);
    for (long long t = 0; t < horizon; ++t)
        if (b.accepts(t)) bw[static_cast<size_t>(t) >> 6] |= uint64_t{1} << (t & 63);
    for (long long x = 0; x < horizon; ++x) {
        if (!a.accepts(x)) continue;
        size_t word_shift = static_cast<size_t>(x) >> 6;
        int bit_shift = static_cast<int>(x & 63);
        for (size_t w = 0; w + word_shift < words; ++w) {
            uint64_t v = bw[w];
            out[w + word_shift] |= v << bit_shift;
            if (bit_shift && w + word_shift + 1 < words)
                out[w + word_shift + 1] |= v >> (64 - bit_shift);
        }
    }
    std::vector<char> bits(static_cast<size_t>(horizon), 0);
    for (long long t = 0; t < horizon; ++t)
        bits[static_cast<size_t>(t)] = (out[static_cast<size_t>(t) >> 6] >> (t & 63)) & 1;

    return canonicalize(bits, stable, ell);
}

UnarySize unary_minimal_size(const UnaryLang& l) { return {l.lambda, l.mu}; }

SplitSearchReport search_best_unary_pair(long long m, long long n, long long budget) {
    require(m >= 8 && n >= 8, "search_best_unary_pair needs m, n >= 8");
    require(m * n <= budget, "search_best_unary_pair budget exceeded");

    SplitSearchReport rep;
    rep.m = m;
    rep.n = n;
    rep.gcd_m_n = std::gcd(m, n);
    rep.gcd_m_n1 = std::gcd(m, n - 1);
    rep.gcd_m1_n = std::gcd(m - 1, n);
    rep.gcd_m2_n = std::gcd(m - 2, n);

    auto bound = [](long long lam1, long long tail1, long long lam2, long long tail2) {
        if (std::gcd(lam1, lam2) == 1) return lam1 * lam2 + tail1 + tail2;
        return 2 * lcm_ll(lam1, lam2) + tail1 + tail2 - 1;
    };

    long long g11 = std::gcd(m - 1, n - 1);
    bool exact_11 = g11 == 2 && (m - 1) % (n - 1) != 0 && (n - 1) % (m - 1) != 0;
    long long exact_value = exact_11 ? 2 * lcm_ll(m - 1, n - 1) - 1 : 0;

    long long best_bound = -1, best_i = -1, best_j = -1;
    long long runner_up = -1;
    for (long long i = 0; i < m; ++i) {
        for (long long j = 0; j < n; ++j) {
            long long c = bound(m - i, i, n - j, j);
            if (!(i == 1 && j == 1) && c > runner_up) runner_up = c;
            if (c > best_bound) {
                best_bound = c;
                best_i = i;
                best_j = j;
            }
        }
    }
    rep.runner_up_bound = runner_up;
    if (exact_11 && exact_value > runner_up) {
        rep.best_i = 1;
        rep.best_j = 1;
        rep.best_value = exact_value;
        rep.winner_is_exact = true;
    } else {
        rep.best_i = best_i;
        rep.best_j = best_j;
        rep.best_value = best_bound;
        rep.winner_is_exact = false;
    }
    return rep;
}

} // namespace mcat::unary
