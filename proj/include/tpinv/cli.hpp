/*
   Copyright 2026 The tpinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TPINV_CLI_HPP
#define TPINV_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "error.hpp"
#include "involution.hpp"
#include "json.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "toeplitz.hpp"

namespace tpinv::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

inline constexpr std::size_t default_max_n = 24;

struct CliConfig {
    std::string command;
    std::string ring = "z";
    std::size_t n = 0;
    std::string format = "text";
    std::optional<std::string> poly;
    bool twice = false;
    std::optional<std::string> column;
    std::optional<std::size_t> k;
    std::size_t max_n = default_max_n;
    std::vector<std::string> minor_overrides;
};

namespace detail {

inline std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        parts.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

// Reports a parse failure with a caret under the offending character.
inline Polynomial parse_argument(const RingSpec& ring, std::size_t n, const std::string& text, const char* what) {
    try {
        return parse_polynomial(ring, n, text);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), std::string(e.message()) + " in " + what + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^");
    }
}

inline void print_poly(std::ostream& out, const CliConfig& cfg, const Polynomial& p, std::optional<std::size_t> k = std::nullopt) {
    if (cfg.format == "json") {
        nlohmann::json j = k ? nlohmann::json{{"k", *k}, {"poly", to_json(p)}} : nlohmann::json{{"poly", to_json(p)}};
        out << j.dump(2) << '\n';
    } else {
        out << p << '\n';
    }
}

inline int cmd_minors(const CliConfig& cfg, const RingSpec& ring, std::ostream& out) {
    if (cfg.k && (*cfg.k < 1 || *cfg.k > cfg.n)) throw RangeError("--k must lie in 1..n");
    const auto table = minor_table(ring, cfg.n);
    const std::size_t lo = cfg.k ? *cfg.k : 1, hi = cfg.k ? *cfg.k : cfg.n;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (std::size_t k = lo; k <= hi; ++k) arr.push_back({{"k", k}, {"poly", to_json(table[k])}});
        out << arr.dump(2) << '\n';
    } else {
        for (std::size_t k = lo; k <= hi; ++k) out << 'm' << k << " = " << table[k] << '\n';
    }
    return ok;
}

inline int cmd_phi(const CliConfig& cfg, const RingSpec& ring, std::ostream& out) {
    const auto p = parse_argument(ring, cfg.n, *cfg.poly, "--poly");
    const auto result = cfg.twice ? apply_phi_twice(p, ring, cfg.n) : apply_phi(p, ring, cfg.n);
    if (cfg.format == "json")
        out << nlohmann::json{{"twice", cfg.twice}, {"poly", to_json(result)}}.dump(2) << '\n';
    else
        out << result << '\n';
    return ok;
}

inline MinorTable apply_overrides(MinorTable table, const CliConfig& cfg, const RingSpec& ring) {
    for (const auto& spec : cfg.minor_overrides) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) throw ParseError(0, "--minor-override expects K:POLY");
        const auto k = tpinv::detail::parse_decimal(spec.substr(0, colon));
        if (k < 1 || k > cfg.n) throw RangeError("--minor-override index outside 1..n");
        table = table.with_minor(static_cast<std::size_t>(k), parse_argument(ring, cfg.n, spec.substr(colon + 1), "--minor-override"));
    }
    return table;
}

inline int cmd_verify(const CliConfig& cfg, const RingSpec& ring, std::ostream& out) {
    const auto report = verify_involution(apply_overrides(minor_table(ring, cfg.n), cfg, ring));
    if (cfg.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        for (const auto& g : report.per_generator) {
            const auto x = "x" + std::to_string(g.k);
            out << (g.passed ? "PASS " : "FAIL ") << x << ": phi(" << x << ") = " << g.image << "; phi(phi(" << x
                << ")) = " << g.double_image << '\n';
        }
        out << "overall: " << (report.overall ? "pass" : "fail") << '\n';
    }
    return report.overall ? ok : verification_failed;
}

inline int cmd_colsdet(const CliConfig& cfg, const RingSpec& ring, std::ostream& out) {
    std::vector<Polynomial> column;
    for (const auto& part : split_commas(*cfg.column)) column.push_back(parse_argument(ring, cfg.n, part, "--column"));
    if (column.size() > cfg.n) throw RangeError("--column has " + std::to_string(column.size()) + " entries, more than n = " + std::to_string(cfg.n));
    print_poly(out, cfg, first_column_det(ring, cfg.n, column), column.size());
    return ok;
}

inline int dispatch(const CliConfig& cfg, std::ostream& out) {
    const auto ring = RingSpec::parse(cfg.ring);
    if (cfg.n > cfg.max_n)
        throw RangeError("refusing n = " + std::to_string(cfg.n) + " above the limit " + std::to_string(cfg.max_n) + " (raise it with --max-n)");
    if (cfg.command == "minors") return cmd_minors(cfg, ring, out);
    if (cfg.command == "phi") return cmd_phi(cfg, ring, out);
    if (cfg.command == "verify") return cmd_verify(cfg, ring, out);
    return cmd_colsdet(cfg, ring, out);
}

}  // namespace detail

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics to err; the return value is the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Toeplitz principal minors and the involution x_k -> m_k", "tpinv"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of variables x1..xn")->required()->check(CLI::PositiveNumber);
        sub->add_option("--ring", cfg.ring, "coefficient ring: z or zmod:M")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--max-n", cfg.max_n, "largest n accepted")->capture_default_str();
    };

    auto* minors = app.add_subcommand("minors", "print the principal minors m1..mn");
    common(minors);
    minors->add_option("--k", cfg.k, "print only mk");

    auto* phi = app.add_subcommand("phi", "apply x_k -> m_k to a polynomial");
    common(phi);
    phi->add_option("--poly", cfg.poly, "polynomial in x1..xn")->required();
    phi->add_flag("--twice", cfg.twice, "apply the substitution twice");

    auto* verify = app.add_subcommand("verify", "check that applying the substitution twice fixes every generator");
    common(verify);
    verify->add_option("--minor-override", cfg.minor_overrides, "replace m_K by POLY before checking (K:POLY)");

    auto* colsdet = app.add_subcommand("colsdet", "determinant of T(k) with a replaced first column");
    common(colsdet);
    colsdet->add_option("--column", cfg.column, "comma-separated polynomials a1,...,ak")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return detail::dispatch(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + (argc > 0 ? 1 : 0), argv + argc), out, err);
}

}  // namespace tpinv::cli

#endif
