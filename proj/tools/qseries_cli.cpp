#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qseries/identities.hpp"
#include "qseries/parser.hpp"
#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path;  // empty = stdout

    int write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return kExitOk;
        }
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open '" << path << "' for writing\n";
            return kExitUsage;
        }
        out << text;
        return kExitOk;
    }
};

std::string coefficients_text(const qseries::TruncatedSeries& s) {
    std::string out;
    for (long n = 0; n <= s.order(); ++n) {
        const mpz_class& c = s.coeff(n);
        if (mpz_sgn(c.get_mpz_t()) == 0) continue;  // text mode drops zeros
        out += std::to_string(n) + "\t" + c.get_str() + "\n";
    }
    return out;
}

std::string coefficients_json(const qseries::TruncatedSeries& s) {
    json doc;
    doc["order"] = s.order();
    json coeffs = json::array();
    for (long n = 0; n <= s.order(); ++n)
        coeffs.push_back(json::array({n, s.coeff(n).get_str()}));
    doc["coeffs"] = std::move(coeffs);
    return doc.dump(2) + "\n";
}

int run_expand(const std::string& expr, long order, const std::string& format,
               const OutputTarget& out) {
    const qseries::TruncatedSeries s = qseries::evaluate(expr, order);
    return out.write(format == "json" ? coefficients_json(s) : coefficients_text(s));
}

json report_json(const qseries::IdentityReport& r) {
    json doc;
    doc["id"] = r.id;
    doc["order"] = r.order;
    doc["status"] = r.pass ? "pass" : "fail";
    if (r.first_mismatch) {
        doc["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                 {"lhs", r.first_mismatch->lhs.get_str()},
                                 {"rhs", r.first_mismatch->rhs.get_str()}};
    }
    doc["millis"] = r.millis;
    return doc;
}

std::string report_text(const qseries::IdentityReport& r) {
    std::string line = (r.pass ? "[pass] " : "[FAIL] ") + r.id + " (order " +
                       std::to_string(r.order) + ", " +
                       std::to_string(r.millis) + " ms)";
    if (r.first_mismatch)
        line += " first mismatch at q^" + std::to_string(r.first_mismatch->exponent) +
                ": lhs=" + r.first_mismatch->lhs.get_str() +
                " rhs=" + r.first_mismatch->rhs.get_str();
    return line + "\n";
}

int run_verify(const std::string& filter, long order, const std::string& format,
               const OutputTarget& out) {
    if (qseries::match_identities(filter).empty()) {
        std::cerr << "error: no identities matched '" << filter << "'\n";
        return kExitUsage;
    }
    const auto reports = qseries::verify_matching(filter, order);
    bool all_pass = true;
    std::string text;
    json doc = json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (format == "json")
            doc.push_back(report_json(r));
        else
            text += report_text(r);
    }
    if (format == "json") {
        text = doc.dump(2) + "\n";
    } else {
        text += std::to_string(reports.size()) + " identities, " +
                (all_pass ? "all pass" : "FAILURES PRESENT") + "\n";
    }
    const int rc = out.write(text);
    if (rc != kExitOk) return rc;
    return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_oracle(long n_max, const std::string& variant_name, bool force,
               const std::string& format, const OutputTarget& out) {
    constexpr long kDpCap = 5000;
    constexpr long kEnumCap = 40;
    if (n_max < 0 || n_max > kDpCap) {
        std::cerr << "error: --n-max must lie in 0.." << kDpCap << "\n";
        return kExitUsage;
    }
    const auto variant = variant_name == "dagger" ? qseries::PartitionWeight::Dagger
                                                  : qseries::PartitionWeight::Plain;
    const long enum_cap = force ? n_max : std::min(n_max, kEnumCap);

    const auto dp = qseries::dp_signed_sums(n_max, variant);
    const auto series =
        qseries::invert(qseries::named(variant == qseries::PartitionWeight::Plain ? "X" : "Y",
                                       n_max));
    bool all_match = true;
    std::string text = "n\tenumeration\tdp\tseries\tmatch\n";
    json rows = json::array();
    for (long n = 0; n <= n_max; ++n) {
        std::optional<mpz_class> enumerated;
        if (n <= enum_cap)
            enumerated = qseries::enumerate_signed_sum(n, variant, enum_cap);
        const bool match = dp[n] == series.coeff(n) &&
                           (!enumerated || *enumerated == dp[n]);
        all_match = all_match && match;
        if (format == "json") {
            json row;
            row["n"] = n;
            row["enumeration"] = enumerated ? json(enumerated->get_str()) : json(nullptr);
            row["dp"] = dp[n].get_str();
            row["series"] = series.coeff(n).get_str();
            row["match"] = match;
            rows.push_back(std::move(row));
        } else {
            text += std::to_string(n) + "\t" + (enumerated ? enumerated->get_str() : "-") +
                    "\t" + dp[n].get_str() + "\t" + series.coeff(n).get_str() + "\t" +
                    (match ? "yes" : "NO") + "\n";
        }
    }
    if (format == "json") {
        json doc;
        doc["variant"] = variant == qseries::PartitionWeight::Plain ? "plain" : "dagger";
        doc["n_max"] = n_max;
        doc["rows"] = std::move(rows);
        text = doc.dump(2) + "\n";
    }
    const int rc = out.write(text);
    if (rc != kExitOk) return rc;
    return all_match ? kExitOk : kExitVerificationFailure;
}

int run_list(const std::string& format, const OutputTarget& out) {
    std::string text;
    json doc = json::array();
    for (const auto& c : qseries::registry()) {
        if (format == "json") {
            doc.push_back({{"id", c.id},
                           {"label", c.label},
                           {"description", c.description},
                           {"default_order", c.default_order}});
        } else {
            text += c.id + "\t" + c.label + "\t" + std::to_string(c.default_order) +
                    "\t" + c.description + "\n";
        }
    }
    if (format == "json") text = doc.dump(2) + "\n";
    return out.write(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qseries: exact integer q-series expansion, dissection and identity checking"};
    app.require_subcommand(1);

    std::string format = "text";
    OutputTarget target;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--out", target.path, "write output to a file instead of stdout");
    };

    auto* expand = app.add_subcommand(
        "expand", "print the coefficients of an expression (one 'n<TAB>c' line per "
                  "nonzero coefficient; JSON lists every coefficient)");
    std::string expand_expr;
    long expand_order = 100;
    expand->add_option("expr", expand_expr, "expression, e.g. \"1/X\" or \"(q,-q^2,-q^3,q^4;q^5)\"")
        ->required();
    expand->add_option("--order", expand_order, "truncation order")->capture_default_str();
    add_common(expand);

    auto* dissect = app.add_subcommand(
        "dissect", "expand one dissection component: sugar for \"(expr)[[r]]%m\"");
    std::string dissect_expr;
    long dissect_order = 100, dissect_residue = 0, dissect_modulus = 10;
    dissect->add_option("expr", dissect_expr, "expression to dissect")->required();
    dissect->add_option("--residue,-r", dissect_residue, "component residue")
        ->capture_default_str();
    dissect->add_option("--modulus,-m", dissect_modulus, "dissection modulus")
        ->capture_default_str();
    dissect->add_option("--order", dissect_order, "truncation order")->capture_default_str();
    add_common(dissect);

    auto* verify = app.add_subcommand("verify", "verify registered identities");
    std::string verify_filter = "*";
    long verify_order = 1000;
    verify->add_option("--filter", verify_filter, "glob over identity ids")
        ->capture_default_str();
    verify->add_option("--order", verify_order,
                       "truncation order (each identity runs at max(order, its default))")
        ->capture_default_str();
    add_common(verify);

    auto* oracle = app.add_subcommand(
        "oracle", "cross-check partition oracles against series coefficients");
    long oracle_n_max = 40;
    std::string oracle_variant = "plain";
    bool oracle_force = false;
    oracle->add_option("--n-max", oracle_n_max, "largest index to check")
        ->capture_default_str();
    oracle->add_option("--variant", oracle_variant, "which signed count")
        ->check(CLI::IsMember({"plain", "dagger"}))
        ->capture_default_str();
    oracle->add_flag("--force", oracle_force, "enumerate beyond the default cap of 40");
    add_common(oracle);

    auto* list = app.add_subcommand("list", "print the identity registry");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (expand->parsed())
            return run_expand(expand_expr, expand_order, format, target);
        if (dissect->parsed()) {
            if (dissect_modulus < 1 || dissect_residue < 0 ||
                dissect_residue >= dissect_modulus) {
                std::cerr << "error: need 0 <= residue < modulus\n";
                return kExitUsage;
            }
            const std::string expr = "(" + dissect_expr + ")[[" +
                                     std::to_string(dissect_residue) + "]]%" +
                                     std::to_string(dissect_modulus);
            return run_expand(expr, dissect_order, format, target);
        }
        if (verify->parsed()) return run_verify(verify_filter, verify_order, format, target);
        if (oracle->parsed())
            return run_oracle(oracle_n_max, oracle_variant, oracle_force, format, target);
        if (list->parsed()) return run_list(format, target);
    } catch (const qseries::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
