#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gk/aut.hpp"
#include "gk/curve.hpp"
#include "gk/numsg.hpp"
#include "gk/quotients.hpp"

namespace gk {

enum class Format { json, csv, md, text };

Format parse_format(const std::string& s);

/// Check groups, run in this order.
enum class Check { identities, points, covering, aut, semigroup, rr, quotients };

inline constexpr Check kAllChecks[] = {Check::identities, Check::points, Check::covering, Check::aut,
                                       Check::semigroup,  Check::rr,     Check::quotients};

const char* check_name(Check c);

struct RunConfig {
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::vector<Check> checks;
    Format format = Format::text;
    std::uint64_t max_field_size = kDefaultEnumerationCap;
    std::size_t max_closure = kDefaultClosureCap;
    bool timing = true;
    std::string emit_path;  // JSONL point dump, empty = none
    std::optional<std::uint64_t> rr_m;  // list the basis for this m
    bool quotient_csv = false;          // csv output is the quotient table
};

struct CheckRecord {
    std::string name;
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass = false;
    double runtime_ms = 0.0;
};

struct VerificationReport {
    TowerParams params;
    std::string fingerprint;
    std::vector<CheckRecord> records;
    std::vector<QuotientRow> quotients;
    std::size_t points_written = 0;

    bool pass() const;
};

/// Runs the configured checks. Throws ArgumentError / LimitError when the
/// configuration cannot be honored (invalid n, caps, unwritable emit path).
VerificationReport run(const RunConfig& config);

void render(std::ostream& os, const VerificationReport& r, const RunConfig& config);

}  // namespace gk
