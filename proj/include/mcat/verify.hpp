#ifndef MCAT_VERIFY_HPP
#define MCAT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mcat/bounds.hpp"
#include "mcat/witness.hpp"

namespace mcat::verify {

using bounds::BigInt;
using bounds::SizeVector;
using witness::Family;

enum class Status { Match, LowerBoundOk, Mismatch, SkippedCap };

const char* status_name(Status s);

struct VerificationCase {
    Family family;
    SizeVector n;
    BigInt expected;
    std::string provenance; // formula | paper | derived
    std::optional<BigInt> tau_enum; // enumeration oracle, when within guard
    BigInt observed;
    Status status = Status::Mismatch;
    long long wall_ms = -1; // negative: not measured
};

/// Expected minimal size for a family instance, straight from the bound
/// formulas (never hard-coded).
BigInt expected_value(Family f, const SizeVector& n);

/// True when the family's expectation is a lower bound rather than an exact
/// value.
bool family_is_lower_bound(Family f);

VerificationCase run_case(Family f, const SizeVector& n, size_t cap,
                          bool with_enum_oracle, bool measure_time);

struct Report {
    std::vector<VerificationCase> cases;

    bool any(Status s) const;
    int exit_code() const; // 0 ok, 1 mismatch, 3 cap
    std::string to_csv() const;
    std::string to_json() const;
};

/// Runs the cross product family x size vectors, filtered to generator
/// preconditions, across `jobs` workers with a deterministic row order.
Report run_sweep(const std::vector<Family>& families,
                 const std::vector<SizeVector>& grid, size_t cap, int jobs,
                 bool with_enum_oracle, bool measure_time);

} // namespace mcat::verify

#endif
