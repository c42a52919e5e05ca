#include "skat/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace skat {

namespace {

std::string role_name(Role r) { return r == Role::eavesdropper ? "eve" : "honest"; }

Role role_from(const std::string& s) {
    if (s == "honest") return Role::honest;
    if (s == "eve") return Role::eavesdropper;
    throw validation_error("unknown variable role \"" + s + "\" (expected honest or eve)");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double parse_probability(const nlohmann::json& v, std::optional<Rational>& exact) {
    exact.reset();
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (auto r = parse_rational(s)) {
            exact = r;
            return r->to_double();
        }
        char* end = nullptr;
        double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw validation_error("cannot parse probability \"" + s + "\"");
        return d;
    }
    throw validation_error("probability must be a number or a string");
}

}  // namespace

std::string format_real(double value, const std::optional<Rational>& exact) {
    if (exact) return exact->str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Json to_json(const JointDistribution& d) {
    Json vars = Json::array();
    for (const auto& v : d.variables())
        vars.push_back(Json{{"name", v.name},
                            {"alphabet", v.alphabet_size},
                            {"role", role_name(v.role)}});
    Json pmf = Json::array();
    for (const auto& e : d.entries())
        pmf.push_back(Json{{"outcome", e.outcome}, {"p", format_real(e.p, e.exact)}});
    return Json{{"variables", std::move(vars)}, {"pmf", std::move(pmf)}};
}

Json to_json(const Channel& ch) {
    return Json{{"input", ch.input_size}, {"output", ch.output_size}, {"rows", ch.matrix}};
}

Json to_json(const IntrinsicResult& r) {
    return Json{{"value_bits", format_real(r.value.value)},
                {"bound", "upper"},
                {"method", to_string(r.method)},
                {"restarts_used", r.restarts_used},
                {"converged", r.converged},
                {"witness", to_json(r.witness)}};
}

Json to_json(const ProtocolStats& s) {
    Json j{{"block_length", s.block_length},
           {"method", s.method == ProtocolStats::Method::exact ? "exact" : "monte-carlo"},
           {"accept_probability", format_real(s.accept_probability, s.accept_exact)},
           {"agree_probability_given_accept",
            format_real(s.agree_probability_given_accept, s.agree_exact)},
           {"eve_key_information_bits", format_real(s.eve_key_information.value)},
           {"trials", s.trials},
           {"std_error", format_real(s.std_error)}};
    if (s.method == ProtocolStats::Method::monte_carlo) {
        j["std_error_accept"] = format_real(s.std_error_accept);
        j["std_error_agree"] = format_real(s.std_error_agree);
        j["std_error_eve_info"] = format_real(s.std_error_eve_info);
        j["eve_info_small_sample"] = s.eve_info_small_sample;
    }
    return j;
}

Json to_json(const FilterResult& f) {
    return Json{{"survival_probability",
                 format_real(f.survival_probability, f.survival_exact)},
                {"filtered", to_json(f.filtered)}};
}

namespace {

Json to_json(const SplittingEvidence& ev) {
    return Json{{"side_x", ev.splitting.side_x},
                {"side_y", ev.splitting.side_y},
                {"eve", ev.splitting.eve},
                {"intrinsic", to_json(ev.intrinsic)},
                {"zero_within_tolerance", ev.zero_within_tol}};
}

}  // namespace

Json to_json(const Certificate& c) {
    Json pairwise = Json::array();
    for (const auto& ev : c.pairwise) pairwise.push_back(to_json(ev));
    Json stats = Json::array();
    for (const auto& s : c.repeated_code.stats) stats.push_back(to_json(s));
    Json bounds = Json::array();
    for (double b : c.repeated_code.induced_key_bound) bounds.push_back(format_real(b));
    return Json{
        {"bound_information", c.bound_information},
        {"reason", c.reason},
        {"pairwise_splittings", std::move(pairwise)},
        {"one_vs_rest", to_json(c.one_vs_rest)},
        {"filter",
         Json{{"private_pair", Json::array({c.filter.p, c.filter.q})},
              {"survival_probability",
               format_real(c.filter.survival_probability, c.filter.survival_exact)},
              {"filtered_key_bound_bits", format_real(c.filter.filtered_key_bound)},
              {"rate_bits", format_real(c.filter.rate)}}},
        {"repeated_code",
         Json{{"stats", std::move(stats)},
              {"induced_key_bound_bits", std::move(bounds)},
              {"best_bound_bits", format_real(c.repeated_code.best_bound)},
              {"best_block_length", c.repeated_code.best_block_length}}},
        {"iform_lower_bound_bits", format_real(c.iform_lower_bound)},
        {"tolerances",
         Json{{"zero", format_real(c.config.zero_tolerance)},
              {"rate", format_real(c.config.rate_tolerance)}}},
    };
}

std::string to_pretty_string(const Json& j) { return j.dump(2) + "\n"; }

std::string to_canonical_string(const JointDistribution& d) {
    return to_pretty_string(to_json(d));
}

JointDistribution distribution_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("pmf"))
        throw validation_error("distribution JSON needs \"variables\" and \"pmf\"");
    std::vector<VariableSpec> vars;
    for (const auto& v : j.at("variables")) {
        VariableSpec spec;
        spec.name = v.at("name").get<std::string>();
        spec.alphabet_size = v.at("alphabet").get<std::int64_t>();
        spec.role = role_from(v.at("role").get<std::string>());
        vars.push_back(std::move(spec));
    }
    std::vector<PmfEntry> entries;
    for (const auto& e : j.at("pmf")) {
        PmfEntry entry;
        entry.outcome = e.at("outcome").get<Outcome>();
        entry.p = parse_probability(e.at("p"), entry.exact);
        entries.push_back(std::move(entry));
    }
    return JointDistribution::unchecked(std::move(vars), std::move(entries));
}

Channel channel_from_json(const nlohmann::json& j) {
    Channel ch;
    ch.input_size = j.at("input").get<std::int64_t>();
    ch.output_size = j.at("output").get<std::int64_t>();
    ch.matrix = j.at("rows").get<std::vector<std::vector<double>>>();
    if (auto v = validate(ch); !v.ok) throw validation_error("invalid channel: " + v.message);
    return ch;
}

JointDistribution load_distribution_text(std::string_view text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw validation_error("JSON parse error at line " + std::to_string(line) +
                               ", column " + std::to_string(col) + ": " + e.what());
    }
    JointDistribution d;
    try {
        d = distribution_from_json(parsed);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("malformed distribution JSON: ") + e.what());
    }
    if (auto v = validate(d); !v.ok) throw validation_error("invalid distribution: " + v.message);
    return d;
}

}  // namespace skat
