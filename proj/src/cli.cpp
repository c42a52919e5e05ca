#include "skat/cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skat/fixtures.hpp"
#include "skat/json_io.hpp"

namespace skat::cli {

namespace {

std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    for (const auto& n : out)
        if (n.empty()) throw validation_error("empty variable name in \"" +
                                              std::string(text) + "\"");
    return out;
}

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

JointDistribution load_distribution(const std::string& source, std::istream& in) {
    if (source.rfind("fixture:", 0) == 0) {
        auto id = fixtures::parse_fixture_id(source.substr(8));
        if (!id) throw validation_error("unknown fixture \"" + source.substr(8) + "\"");
        return fixtures::build(*id);
    }
    if (source == "-") return load_distribution_text(read_stream(in));
    std::ifstream file(source, std::ios::binary);
    if (!file) throw validation_error("cannot open \"" + source + "\"");
    std::ostringstream os;
    os << file.rdbuf();
    return load_distribution_text(os.str());
}

std::uint64_t budget_from_env() {
    if (const char* v = std::getenv("SKAT_BUDGET")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
        throw validation_error("SKAT_BUDGET must be a positive integer");
    }
    return EnumerationBudget{}.max_tuples;
}

std::string table_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

void print_table(std::ostream& out, const Json& j, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            print_table(out, value, name);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (std::size_t i = 0; i < value.size(); ++i)
                print_table(out, value[i], name + "[" + std::to_string(i) + "]");
        } else {
            out << name << "\t" << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
        }
    }
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "json")
        out << to_pretty_string(j);
    else
        print_table(out, j);
}

}  // namespace

MeasureExpr parse_measure_expr(std::string_view text) {
    MeasureExpr expr;
    expr.text = std::string(text);
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        expr.kind = MeasureExpr::Kind::entropy;
        expr.x = split_names(text);
        return expr;
    }
    expr.x = split_names(text.substr(0, colon));
    auto rest = text.substr(colon + 1);
    auto bar = rest.find('|');
    if (bar == std::string_view::npos) {
        expr.kind = MeasureExpr::Kind::mutual_information;
        expr.y = split_names(rest);
        return expr;
    }
    expr.y = split_names(rest.substr(0, bar));
    auto z = rest.substr(bar + 1);
    if (z.empty()) {
        expr.kind = MeasureExpr::Kind::mutual_information;
    } else {
        expr.kind = MeasureExpr::Kind::conditional_mutual_information;
        expr.z = split_names(z);
    }
    return expr;
}

namespace {

int run_analyze(const std::string& dist_src, const std::vector<std::string>& exprs,
                const std::string& format, std::istream& in, std::ostream& out) {
    auto d = load_distribution(dist_src, in);
    Json measures = Json::array();
    std::vector<double> values;
    for (const auto& text : exprs) {
        auto expr = parse_measure_expr(text);
        double v = 0.0;
        const char* kind = "";
        switch (expr.kind) {
            case MeasureExpr::Kind::entropy:
                v = entropy(d, expr.x).value;
                kind = "entropy";
                break;
            case MeasureExpr::Kind::mutual_information:
                v = mutual_information(d, expr.x, expr.y).value;
                kind = "mutual-information";
                break;
            case MeasureExpr::Kind::conditional_mutual_information:
                v = conditional_mutual_information(d, expr.x, expr.y, expr.z).value;
                kind = "conditional-mutual-information";
                break;
        }
        values.push_back(v);
        measures.push_back(Json{{"expr", expr.text}, {"kind", kind},
                                {"bits", format_real(v)}});
    }
    if (format == "json") {
        emit(out, Json{{"source", dist_src}, {"measures", std::move(measures)}}, format);
    } else {
        for (double v : values) out << table_number(v) << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Secret-correlation analysis for finite joint distributions"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Evaluate information measures");
    std::vector<std::string> measure_exprs;
    std::string analyze_dist, analyze_format = "table";
    analyze->add_option("--dist", analyze_dist, "Distribution: path, - for stdin, or fixture:<id>")
        ->required();
    analyze->add_option("--measure,-m", measure_exprs,
                        "Measure expression: X1,X2:Y|Z for I(X:Y|Z), X:Y for I(X:Y), "
                        "bare set for entropy (repeatable)");
    analyze->add_option("--cmi", measure_exprs, "Alias for --measure");
    analyze->add_option("--mi", measure_exprs, "Alias for --measure");
    analyze->add_option("--entropy", measure_exprs, "Alias for --measure");
    analyze->add_option("--format", analyze_format, "Output format (default: table)")
        ->check(CLI::IsMember({"json", "table"}));

    // intrinsic
    auto* intrinsic_cmd = app.add_subcommand("intrinsic", "Minimize I(x:y|E') over channels "
                                                          "acting on the eavesdropper");
    std::string intr_dist, intr_x, intr_y, intr_eve, intr_method = "combined";
    std::string intr_format = "json";
    int intr_restarts = 32, intr_max_iters = 200;
    std::uint64_t intr_seed = 0;
    std::int64_t intr_max_output = 0;
    intrinsic_cmd->add_option("--dist", intr_dist, "Distribution source")->required();
    intrinsic_cmd->add_option("--x", intr_x, "Comma-separated left side")->required();
    intrinsic_cmd->add_option("--y", intr_y, "Comma-separated right side")->required();
    intrinsic_cmd->add_option("--eve", intr_eve, "Eavesdropper variable (default: the one "
                                                 "with the eve role)");
    intrinsic_cmd->add_option("--restarts", intr_restarts,
                              "Random restarts for the continuous search (default: 32)");
    intrinsic_cmd->add_option("--seed", intr_seed, "PRNG seed (default: 0)");
    intrinsic_cmd->add_option("--max-iters", intr_max_iters,
                              "Sweep budget per restart (default: 200)");
    intrinsic_cmd->add_option("--max-output", intr_max_output,
                              "Output alphabet cap (default: 0 = Eve's alphabet size)");
    intrinsic_cmd
        ->add_option("--method", intr_method,
                     "Search family: combined, deterministic or continuous (default: combined)")
        ->check(CLI::IsMember({"combined", "deterministic", "continuous"}));
    intrinsic_cmd->add_option("--format", intr_format, "Output format (default: json)")
        ->check(CLI::IsMember({"json", "table"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a key-distillation protocol");
    std::string sim_protocol, sim_dist, sim_p = "B", sim_q = "C", sim_format = "json";
    int sim_n = 1;
    std::uint64_t sim_trials = 100000, sim_seed = 0;
    bool sim_exact = false, sim_strict = false;
    simulate->add_option("protocol", sim_protocol, "repeated-code or equality-filter")
        ->required()
        ->check(CLI::IsMember({"repeated-code", "equality-filter"}));
    simulate->add_option("--dist", sim_dist, "Distribution source")->required();
    simulate->add_option("--n", sim_n, "Block length N (default: 1)");
    simulate->add_option("--trials", sim_trials, "Monte Carlo trials (default: 100000)");
    simulate->add_option("--seed", sim_seed, "PRNG seed (default: 0)");
    simulate->add_flag("--exact", sim_exact,
                       "Exact analysis when within budget (falls back to Monte Carlo "
                       "with a warning unless --strict)");
    simulate->add_flag("--strict", sim_strict, "Fail instead of falling back");
    simulate->add_option("--p", sim_p, "First filtered variable (default: B)");
    simulate->add_option("--q", sim_q, "Second filtered variable (default: C)");
    simulate->add_option("--format", sim_format, "Output format (default: json)")
        ->check(CLI::IsMember({"json", "table"}));

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Report on the secrecy structure of a "
                                                      "tripartite distribution");
    std::string cert_dist, cert_format = "json";
    int cert_restarts = 32, cert_max_n = 8;
    std::uint64_t cert_seed = 0;
    certify_cmd->add_option("--dist", cert_dist, "Distribution source")->required();
    certify_cmd->add_option("--restarts", cert_restarts,
                            "Random restarts per splitting (default: 32)");
    certify_cmd->add_option("--seed", cert_seed, "PRNG seed (default: 0)");
    certify_cmd->add_option("--max-n", cert_max_n,
                            "Largest repeated-code block length (default: 8)");
    certify_cmd->add_option("--format", cert_format, "Output format (default: json)")
        ->check(CLI::IsMember({"json", "table"}));

    // fixture
    auto* fixture_cmd = app.add_subcommand("fixture", "Emit a built-in distribution as "
                                                      "canonical JSON");
    std::string fixture_id;
    fixture_cmd->add_option("id", fixture_id, "One of: p1, p2, p3, pmix")->required();

    std::vector<const char*> argv;
    argv.push_back("skat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        std::uint64_t budget = budget_from_env();

        if (*analyze) {
            if (measure_exprs.empty())
                throw validation_error("analyze needs at least one --measure expression");
            return run_analyze(analyze_dist, measure_exprs, analyze_format, in, out);
        }

        if (*intrinsic_cmd) {
            auto d = load_distribution(intr_dist, in);
            auto x = split_names(intr_x);
            auto y = split_names(intr_y);
            std::string eve = intr_eve;
            if (eve.empty()) {
                auto ei = d.eve_index();
                if (!ei) throw validation_error("distribution has no eavesdropper variable");
                eve = d.variables()[*ei].name;
            }
            IntrinsicResult result;
            if (intr_method == "deterministic") {
                result = min_over_deterministic(d, x, y, eve, intr_max_output);
            } else if (intr_method == "continuous") {
                result = local_search(d, x, y, eve, intr_restarts, intr_seed, intr_max_iters,
                                      intr_max_output);
            } else {
                IntrinsicConfig cfg;
                cfg.max_output_size = intr_max_output;
                cfg.restarts = intr_restarts;
                cfg.seed = intr_seed;
                cfg.max_iters = intr_max_iters;
                result = intrinsic_info(d, x, y, eve, cfg);
            }
            Json j = to_json(result);
            j["x"] = x;
            j["y"] = y;
            j["eve"] = eve;
            emit(out, j, intr_format);
            return 0;
        }

        if (*simulate) {
            auto d = load_distribution(sim_dist, in);
            if (sim_protocol == "equality-filter") {
                auto r = equality_filter(d, sim_p, sim_q);
                Json j = to_json(r);
                j["protocol"] = "equality-filter";
                emit(out, j, sim_format);
                return 0;
            }
            ProtocolStats stats;
            if (sim_exact) {
                ExactProtocolConfig cfg;
                cfg.max_types = budget;
                try {
                    stats = repeated_code_exact(d, sim_n, cfg);
                } catch (const budget_error& e) {
                    if (sim_strict) throw;
                    err << "warning: " << e.what() << "; falling back to Monte Carlo\n";
                    stats = repeated_code_monte_carlo(d, sim_n, sim_trials, sim_seed);
                }
            } else {
                stats = repeated_code_monte_carlo(d, sim_n, sim_trials, sim_seed);
            }
            Json j = to_json(stats);
            j["protocol"] = "repeated-code";
            emit(out, j, sim_format);
            return 0;
        }

        if (*certify_cmd) {
            auto d = load_distribution(cert_dist, in);
            CertifyConfig cfg;
            cfg.intrinsic.restarts = cert_restarts;
            cfg.intrinsic.seed = cert_seed;
            cfg.max_block_length = cert_max_n;
            cfg.exact.max_block_length = cert_max_n;
            cfg.exact.max_types = budget;
            auto cert = certify(d, cfg);
            emit(out, to_json(cert), cert_format);
            return 0;
        }

        if (*fixture_cmd) {
            auto id = fixtures::parse_fixture_id(fixture_id);
            if (!id) throw validation_error("unknown fixture \"" + fixture_id + "\"");
            out << to_canonical_string(fixtures::build(*id));
            return 0;
        }
    } catch (const unknown_variable_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace skat::cli
