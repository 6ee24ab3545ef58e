#include "mcat/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mcat/concat.hpp"
#include "mcat/unary.hpp"

namespace mcat::verify {

const char* status_name(Status s) {
    switch (s) {
    case Status::Match: return "match";
    case Status::LowerBoundOk: return "lower-bound-ok";
    case Status::Mismatch: return "mismatch";
    case Status::SkippedCap: return "skipped-cap";
    }
    return "?";
}

bool family_is_lower_bound(Family f) {
    return f == Family::BinaryLb || f == Family::TernaryLb;
}

BigInt expected_value(Family f, const SizeVector& n) {
    switch (f) {
    case Family::Kp1:
    case Family::Kp1Two:
    case Family::KLetter:
    case Family::KLetter2State:
        return bounds::count_valid_states(n).tau;
    case Family::BinaryK2: {
        int n1 = n.n[0], n2 = n.n[1];
        if (n2 == 1) return BigInt(n1);
        if (n1 == 1) return BigInt(1) << (n2 - 1);
        return bounds::count_valid_states(n).tau;
    }
    case Family::BinaryLb: return bounds::binary_lower_bound(n);
    case Family::TernaryLb: return bounds::ternary_lower_bound(n);
    case Family::UnaryCyclic: {
        std::vector<long long> sizes(n.n.begin(), n.n.end());
        return BigInt(unary::cyclic_concat_size(sizes).states());
    }
    case Family::ExampleK5_14:
        return bounds::interval_bound(SizeVector{{3, 3, 1, 1, 3}});
    }
    throw std::logic_error("unknown family");
}

namespace {

std::string provenance_of(Family f) {
    switch (f) {
    case Family::ExampleK5_14: return "paper";
    case Family::BinaryLb:
    case Family::TernaryLb: return "derived";
    default: return "formula";
    }
}

BigInt observe(Family f, const SizeVector& n, size_t cap) {
    if (f == Family::UnaryCyclic) {
        // the unary engine is the exact pipeline here
        unary::UnaryLang acc = unary::unary_lang_of_lengths({0}); // {empty word}
        for (int ni : n.n) {
            unary::UnaryLang l = unary::unary_from_automaton(ni, 0, {ni - 1});
            acc = unary::unary_concat(acc, l);
        }
        return BigInt(unary::unary_minimal_size(acc).states());
    }
    auto dfas = witness::generate(f, n);
    return BigInt(run_concat_pipeline(dfas, cap).minimal);
}

} // namespace

VerificationCase run_case(Family f, const SizeVector& n, size_t cap,
                          bool with_enum_oracle, bool measure_time) {
    VerificationCase c;
    c.family = f;
    c.n = n;
    c.provenance = provenance_of(f);
    c.expected = expected_value(f, n);

    if (with_enum_oracle && n.k() >= 2) {
        bool all_ge2 = true;
        long rest_bits = 0;
        for (int i = 0; i < n.k(); ++i) {
            if (n.n[static_cast<size_t>(i)] < 2) all_ge2 = false;
            if (i > 0) rest_bits += n.n[static_cast<size_t>(i)];
        }
        if (all_ge2 && rest_bits <= 24 &&
            BigInt(n.n[0]) * (BigInt(1) << rest_bits) <= (BigInt(1) << 24))
            c.tau_enum = bounds::enumerate_valid_states(n);
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        c.observed = observe(f, n, cap);
        if (family_is_lower_bound(f))
            c.status = c.observed >= c.expected ? Status::LowerBoundOk : Status::Mismatch;
        else
            c.status = c.observed == c.expected ? Status::Match : Status::Mismatch;
    } catch (const CapExceeded&) {
        c.status = Status::SkippedCap;
    } catch (const unary::HorizonExceeded&) {
        c.status = Status::SkippedCap;
    }
    if (measure_time) {
        auto t1 = std::chrono::steady_clock::now();
        c.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    return c;
}

bool Report::any(Status s) const {
    for (const auto& c : cases)
        if (c.status == s) return true;
    return false;
}

int Report::exit_code() const {
    if (any(Status::Mismatch)) return 1;
    if (any(Status::SkippedCap)) return 3;
    return 0;
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "family,n,tau_formula,tau_enum,minimal_observed,status,wall_ms\n";
    for (const auto& c : cases) {
        out << witness::family_name(c.family) << ",\"" << bounds::to_string(c.n) << "\","
            << c.expected.str() << ',';
        if (c.tau_enum) out << c.tau_enum->str();
        out << ',';
        if (c.status != Status::SkippedCap) out << c.observed.str();
        out << ',' << status_name(c.status) << ',';
        if (c.wall_ms >= 0) out << c.wall_ms;
        out << '\n';
    }
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json row;
        row["family"] = witness::family_name(c.family);
        row["n"] = bounds::to_string(c.n);
        row["tau_formula"] = c.expected.str();
        if (c.tau_enum) row["tau_enum"] = c.tau_enum->str();
        if (c.status != Status::SkippedCap) row["minimal_observed"] = c.observed.str();
        row["provenance"] = c.provenance;
        row["status"] = status_name(c.status);
        if (c.wall_ms >= 0) row["wall_ms"] = c.wall_ms;
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

Report run_sweep(const std::vector<Family>& families,
                 const std::vector<SizeVector>& grid, size_t cap, int jobs,
                 bool with_enum_oracle, bool measure_time) {
    struct Job {
        Family f;
        SizeVector n;
    };
    std::vector<Job> todo;
    for (Family f : families)
        for (const auto& n : grid)
            if (witness::in_precondition(f, n)) todo.push_back({f, n});

    Report rep;
    rep.cases.resize(todo.size());
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    jobs = std::min<int>(jobs, std::max<int>(1, static_cast<int>(todo.size())));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            rep.cases[i] =
                run_case(todo[i].f, todo[i].n, cap, with_enum_oracle, measure_time);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rep;
}

} // namespace mcat::verify
