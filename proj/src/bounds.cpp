#include "mcat/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace mcat::bounds {

namespace {

BigInt pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

void require(bool ok, const char* clause) {
    if (!ok) throw std::invalid_argument(std::string("bounds: ") + clause);
}

// U/V recursion over the 1-based factor range [lo, hi] of n, seeded with the
// given boundary at hi; fills tables down to index lo.
struct UvTables {
    std::vector<BigInt> U, V; // indexed by factor number
};

UvTables run_recursion(const SizeVector& n, int lo, int hi, BigInt u_hi, BigInt v_hi) {
    UvTables t;
    t.U.assign(static_cast<size_t>(n.k()) + 1, BigInt(0));
    t.V.assign(static_cast<size_t>(n.k()) + 1, BigInt(0));
    t.U[static_cast<size_t>(hi)] = std::move(u_hi);
    t.V[static_cast<size_t>(hi)] = std::move(v_hi);
    for (int i = hi - 1; i >= lo; --i) {
        int ni = n.n[static_cast<size_t>(i - 1)];
        t.U[static_cast<size_t>(i)] = 1 +
            (pow2(ni - 1) - 1) * t.U[static_cast<size_t>(i + 1)] +
            pow2(ni - 1) * t.V[static_cast<size_t>(i + 1)];
        t.V[static_cast<size_t>(i)] =
            pow2(ni - 2) * (t.U[static_cast<size_t>(i + 1)] + t.V[static_cast<size_t>(i + 1)]);
    }
    return t;
}

// Count of tuples (S_1,...,S_m) with everything after the run empty: S_m must
// avoid its final state, so the run's boundary is U = 2^{n_m-1}, V = 2^{n_m-2}.
BigInt prefix_avoiding_final(const SizeVector& n, int m) {
    int n1 = n.n[0];
    if (m == 1) return BigInt(n1 - 1);
    UvTables t = run_recursion(n, 2, m, pow2(n.n[static_cast<size_t>(m - 1)] - 1),
                               pow2(n.n[static_cast<size_t>(m - 1)] - 2));
    return BigInt(n1 - 1) * t.U[2] + t.V[2];
}

} // namespace

void SizeVector::validate() const {
    if (n.empty()) throw std::invalid_argument("size vector: k must be >= 1");
    for (int v : n)
        if (v < 1) throw std::invalid_argument("size vector: entries must be >= 1");
}

SizeVector parse_size_vector(const std::string& text) {
    SizeVector out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("size vector: empty entry");
        out.n.push_back(std::stoi(tok));
    }
    out.validate();
    return out;
}

std::string to_string(const SizeVector& n) {
    std::ostringstream out;
    for (size_t i = 0; i < n.n.size(); ++i) out << (i ? "," : "") << n.n[i];
    return out.str();
}

BoundResult count_valid_states(const SizeVector& n) {
    n.validate();
    require(n.k() >= 2, "count_valid_states needs k >= 2");
    for (int v : n.n) require(v >= 2, "count_valid_states needs every n_i >= 2");

    int k = n.k();
    UvTables t = run_recursion(n, 2, k, pow2(n.n[static_cast<size_t>(k - 1)]),
                               pow2(n.n[static_cast<size_t>(k - 1)] - 1));
    BoundResult r;
    r.U = std::move(t.U);
    r.V = std::move(t.V);
    r.tau = BigInt(n.n[0] - 1) * r.U[2] + r.V[2];
    return r;
}

BigInt count_valid_k3_closed(int n1, int n2, int n3) {
    require(n1 >= 2 && n2 >= 2 && n3 >= 2, "closed k=3 form needs n_i >= 2");
    // n1 (1 + (3/4) 2^{n2+n3} - 2^{n3}) - (3/8) 2^{n2+n3} + 2^{n3} - 1,
    // with the fractions expanded as shifts
    BigInt p3 = pow2(n3);
    return BigInt(n1) * (1 + 3 * pow2(n2 + n3 - 2) - p3) - 3 * pow2(n2 + n3 - 3) + p3 - 1;
}

BigInt enumerate_valid_states(const SizeVector& n) {
    n.validate();
    require(n.k() >= 2, "enumerate_valid_states needs k >= 2");
    for (int v : n.n) require(v >= 2, "enumerate_valid_states needs every n_i >= 2");

    long rest_bits = 0;
    for (int i = 1; i < n.k(); ++i) rest_bits += n.n[static_cast<size_t>(i)];
    require(rest_bits < 63 && BigInt(n.n[0]) * pow2(rest_bits) <= (BigInt(1) << 24),
            "enumerate_valid_states guard n_1 * 2^{n_2+...+n_k} <= 2^24 exceeded");

    const int k = n.k();
    // per-factor masks within a packed word of the k-1 subset components
    std::vector<long> shift(static_cast<size_t>(k), 0);
    for (int i = 2; i < k; ++i)
        shift[static_cast<size_t>(i)] =
            shift[static_cast<size_t>(i - 1)] + n.n[static_cast<size_t>(i - 1)];

    uint64_t total = uint64_t{1} << rest_bits;
    long long count = 0;
    for (int q = 0; q < n.n[0]; ++q) {
        bool q_final = (q == n.n[0] - 1);
        for (uint64_t w = 0; w < total; ++w) {
            bool ok = true;
            bool prev_empty = false;
            bool prev_hits_final = q_final;
            for (int i = 1; i < k && ok; ++i) {
                int ni = n.n[static_cast<size_t>(i)];
                uint64_t s = (w >> shift[static_cast<size_t>(i)]) &
                             ((uint64_t{1} << ni) - 1);
                if (i >= 2 && prev_empty && s != 0) ok = false;
                if (prev_hits_final && !(s & 1)) ok = false; // bit 0 is s_i
                prev_empty = (s == 0);
                prev_hits_final = (s >> (ni - 1)) & 1; // top bit is f_i
            }
            if (ok) ++count;
        }
    }
    return BigInt(count);
}

std::pair<BigInt, BigInt> sandwich_bounds(const SizeVector& n) {
    n.validate();
    require(n.k() >= 3, "sandwich_bounds needs k >= 3");
    for (int v : n.n) require(v >= 2, "sandwich_bounds needs every n_i >= 2");
    long rest = 0;
    for (int i = 1; i < n.k(); ++i) rest += n.n[static_cast<size_t>(i)];
    // n_1 2^{rest} / 2^{k-1} and 3 n_1 2^{rest} / 4: integers by construction
    require(rest >= n.k() - 1, "sandwich lower bound is not an integer");
    require(rest >= 2, "sandwich upper bound is not an integer");
    BigInt lower = BigInt(n.n[0]) * pow2(rest - (n.k() - 1));
    BigInt upper = 3 * BigInt(n.n[0]) * pow2(rest - 2);
    return {lower, upper};
}

BigInt one_state_bound(const SizeVector& n, int j) {
    n.validate();
    const int k = n.k();
    require(k >= 2, "one_state_bound needs k >= 2");
    require(j >= 0 && j < k, "one_state_bound: position out of range");
    require(n.n[static_cast<size_t>(j)] == 1, "one_state_bound: n_j must be 1");
    for (int i = 0; i < k; ++i)
        if (i != j)
            require(n.n[static_cast<size_t>(i)] >= 2,
                    "one_state_bound: every other factor needs n_i >= 2");

    if (j == 0) {
        // first component pinned to the final sink: V_2 with the standard boundary
        UvTables t = run_recursion(n, 2, k, pow2(n.n[static_cast<size_t>(k - 1)]),
                                   pow2(n.n[static_cast<size_t>(k - 1)] - 1));
        return t.V[2];
    }
    if (j == k - 1) {
        if (k == 2) return BigInt(n.n[0]);
        return prefix_avoiding_final(n, k - 1) + 1; // +1: accept-all sink class
    }
    // middle position: states living entirely before j, plus the pinned-prefix
    // states carrying suffixes after j
    UvTables suffix = run_recursion(n, j + 2, k, pow2(n.n[static_cast<size_t>(k - 1)]),
                                    pow2(n.n[static_cast<size_t>(k - 1)] - 1));
    return prefix_avoiding_final(n, j) + suffix.V[static_cast<size_t>(j + 2)];
}

BigInt interval_bound(const SizeVector& n) {
    n.validate();
    const int k = n.k();
    require(k >= 3, "interval_bound needs k >= 3");

    // maximal runs of n_i >= 2, 1-based [i,j]
    std::vector<std::pair<int, int>> intervals;
    for (int i = 1; i <= k;) {
        if (n.n[static_cast<size_t>(i - 1)] >= 2) {
            int j = i;
            while (j + 1 <= k && n.n[static_cast<size_t>(j)] >= 2) ++j;
            intervals.emplace_back(i, j);
            i = j + 1;
        } else {
            ++i;
        }
    }
    require(!intervals.empty(), "interval_bound: no factor has n_i >= 2");

    auto interval_tables = [&](int lo, int hi) {
        BigInt u_hi, v_hi;
        if (hi == k) {
            u_hi = pow2(n.n[static_cast<size_t>(hi - 1)]);
            v_hi = pow2(n.n[static_cast<size_t>(hi - 1)] - 1);
        } else {
            // followed by a one-state factor: the run must avoid its final state
            u_hi = pow2(n.n[static_cast<size_t>(hi - 1)] - 1);
            v_hi = pow2(n.n[static_cast<size_t>(hi - 1)] - 2);
        }
        return run_recursion(n, lo, hi, std::move(u_hi), std::move(v_hi));
    };

    BigInt total = 0;
    auto [i1, j1] = intervals[0];
    size_t rest_from = 1;
    if (i1 == 1) {
        if (j1 == 1) {
            total += BigInt(n.n[0] - 1);
        } else {
            UvTables t = interval_tables(2, j1);
            total += BigInt(n.n[0] - 1) * t.U[2] + t.V[2];
        }
    } else {
        rest_from = 0; // leading one-state run: the first interval counts as V too
    }
    for (size_t l = rest_from; l < intervals.size(); ++l) {
        auto [il, jl] = intervals[l];
        if (il == jl) {
            total += jl == k ? pow2(n.n[static_cast<size_t>(jl - 1)] - 1)
                             : pow2(n.n[static_cast<size_t>(jl - 1)] - 2);
        } else {
            UvTables t = interval_tables(il, jl);
            total += t.V[static_cast<size_t>(il)];
        }
    }
    if (intervals.back().second < k) total += 1; // accept-all sink class
    return total;
}

BigInt binary_lower_bound(const SizeVector& n) {
    n.validate();
    const int k = n.k();
    require(k >= 3, "binary_lower_bound needs k >= 3");
    require(n.n[0] >= 3, "binary_lower_bound needs n_1 >= 3");
    require(n.n[1] >= 4, "binary_lower_bound needs n_2 >= 4");
    for (int i = 2; i < k; ++i)
        require(n.n[static_cast<size_t>(i)] >= 3, "binary_lower_bound needs n_i >= 3");
    long rest = 0;
    for (int i = 1; i < k; ++i) rest += n.n[static_cast<size_t>(i)];
    long exp = rest - (2 * k - 2);
    require(exp >= 0, "binary_lower_bound: negative exponent");
    return BigInt(n.n[0] - 1) + pow2(exp);
}

BigInt ternary_lower_bound(const SizeVector& n) {
    n.validate();
    const int k = n.k();
    require(k >= 2, "ternary_lower_bound needs k >= 2");
    require(n.n[0] >= 3, "ternary_lower_bound needs n_1 >= 3");
    require(n.n[1] >= 4, "ternary_lower_bound needs n_2 >= 4");
    for (int i = 2; i < k; ++i)
        require(n.n[static_cast<size_t>(i)] >= 3, "ternary_lower_bound needs n_i >= 3");
    long rest = 0;
    for (int i = 1; i < k; ++i) rest += n.n[static_cast<size_t>(i)];
    long exp = rest - (2 * k - 2);
    require(exp >= 0, "ternary_lower_bound: negative exponent");
    return BigInt(n.n[0]) * pow2(exp);
}

} // namespace mcat::bounds
