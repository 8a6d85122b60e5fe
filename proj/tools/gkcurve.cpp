// Command-line driver for the verification runs.
//
//   gkcurve verify --n 2 --all
//   gkcurve points --n 2 --emit pts.jsonl
//   gkcurve quotients --n 3 --format csv
//
// Exit status: 0 when every record passes, 1 on a failed record, 2 on a
// usage or configuration error.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "gk/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification laboratory for the maximal curve over F_{q^2}, q = n^3"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file mirroring the flags; flags win");

    std::uint64_t n = 0;
    std::uint32_t p = 0, h = 0;
    std::string format = "text";
    std::string emit;
    std::string output;
    std::uint64_t max_field = gk::kDefaultEnumerationCap;
    std::size_t max_closure = gk::kDefaultClosureCap;
    bool no_timing = false;
    bool all = false;
    std::uint64_t rr_m = 0;

    app.add_option("--n", n, "n = p^h (prime power)");
    app.add_option("--p", p, "characteristic");
    app.add_option("--h", h, "exponent with n = p^h");
    app.add_option("--format", format, "json|csv|md|text")->check(CLI::IsMember({"json", "csv", "md", "text"}));
    app.add_option("--emit", emit, "write the point set as JSONL to this path");
    app.add_option("--output", output, "write the report here instead of stdout");
    app.add_option("--max-field-size", max_field, "largest q^2 that may be enumerated");
    app.add_option("--max-closure", max_closure, "largest group closure");
    app.add_flag("--no-timing", no_timing, "omit runtimes so output is byte-reproducible");
    app.add_flag("--all", all, "run every check group (verify/report)");

    const std::map<std::string, std::pair<std::string, std::vector<gk::Check>>> commands = {
        {"verify", {"aggregate run; cheap checks unless --all", {}}},
        {"report", {"same as verify", {}}},
        {"verify-identities", {"polynomial identities for h(X)", {gk::Check::identities}}},
        {"points", {"enumerate the rational points", {gk::Check::points}}},
        {"maximality", {"point count, Hermitian containment, smoothness", {gk::Check::points}}},
        {"aut", {"generators, fixed points, closure orders", {gk::Check::aut}}},
        {"semigroup", {"Weierstrass semigroup, genus, order sequence", {gk::Check::semigroup}}},
        {"rr-basis", {"Riemann-Roch basis sizes and independence", {gk::Check::rr}}},
        {"quotients", {"quotient genera and automorphism counts", {gk::Check::quotients}}},
        {"covering", {"Hermitian covering obstruction", {gk::Check::covering}}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        sub->fallthrough();
        subs[name] = sub;
    }
    subs["rr-basis"]->add_option("--m", rr_m, "also list the basis of L(m X_inf)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    gk::RunConfig cfg;
    try {
        gk::TowerParams prm;
        if (n != 0) {
            prm = gk::TowerParams::from_n(n);
            if ((p != 0 && p != prm.p) || (h != 0 && h != prm.h)) {
                throw gk::ArgumentError("--n disagrees with --p/--h");
            }
        } else if (p != 0 && h != 0) {
            prm = gk::TowerParams::make(p, h);
        } else {
            throw gk::ArgumentError("give --n or both --p and --h");
        }
        if (max_field == 0 || max_closure == 0) throw gk::ArgumentError("caps must be positive");
        cfg.p = prm.p;
        cfg.h = prm.h;
        cfg.format = gk::parse_format(format);
        cfg.max_field_size = max_field;
        cfg.max_closure = max_closure;
        cfg.timing = !no_timing;
        cfg.emit_path = emit;

        const std::string name = app.get_subcommands().front()->get_name();
        cfg.checks = commands.at(name).second;
        if (name == "verify" || name == "report") {
            if (all) {
                cfg.checks.assign(std::begin(gk::kAllChecks), std::end(gk::kAllChecks));
            } else {
                cfg.checks = {gk::Check::identities, gk::Check::covering, gk::Check::semigroup,
                              gk::Check::quotients};
            }
        }
        if (name == "rr-basis" && subs["rr-basis"]->count("--m") > 0) cfg.rr_m = rr_m;
        cfg.quotient_csv = name == "quotients";

        const gk::VerificationReport report = gk::run(cfg);
        if (output.empty()) {
            gk::render(std::cout, report, cfg);
        } else {
            std::ofstream os(output);
            if (!os) throw gk::ArgumentError("cannot open '" + output + "' for writing");
            gk::render(os, report, cfg);
            if (!os) throw gk::ArgumentError("failed writing '" + output + "'");
        }
        return report.pass() ? 0 : kExitFail;
    } catch (const gk::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const gk::LimitError& e) {
        std::cerr << "error: " << e.what() << " (raise --max-field-size / --max-closure)\n";
        return kExitUsage;
    }
}
