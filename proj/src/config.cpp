#include "dynkin/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dynkin/error.hpp"

namespace dynkin {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::config_parse, path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) parse_error(path + "." + key, "unknown key");
    }
}

double number(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) parse_error(path + "." + key, "missing required field");
    if (!it->is_number()) parse_error(path + "." + key, "expected a number");
    return it->get<double>();
}

double number_or(const json& obj, const std::string& key, const std::string& path, double fallback) {
    return obj.contains(key) ? number(obj, key, path) : fallback;
}

std::optional<std::string> string_or_none(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) parse_error(path + "." + key, "expected a string");
    return it->get<std::string>();
}

}  // namespace

DiscountedPayoffs RunConfig::payoffs() const {
    return kind == PayoffKind::constant ? constant_payoffs(constant) : make_discounted(option);
}

void RunConfig::validate() const {
    interval.validate();
    if (kind == PayoffKind::constant) {
        if (!std::isfinite(constant)) throw Error(ErrorCode::invalid_params, "constant must be finite");
        if (!(std::isfinite(option.rate) && option.rate >= 0.0))
            throw Error(ErrorCode::invalid_params, "rate must be >= 0");
    } else {
        option.validate();
    }
    if (n_list.empty()) throw Error(ErrorCode::empty_n_list, "n_list is empty");
    if (spots.empty()) throw Error(ErrorCode::invalid_params, "spots is empty");
    for (int n : n_list) {
        for (double s : spots) grid(s, n).validate();
    }
}

RunConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        parse_error("config", e.what());
    }
    const std::string root = "config";
    if (!doc.is_object()) parse_error(root, "expected a JSON object");

    RunConfig cfg;
    const auto kind_it = doc.find("kind");
    if (kind_it == doc.end()) parse_error(root + ".kind", "missing required field");
    if (!kind_it->is_string()) parse_error(root + ".kind", "expected a string");
    const auto kind = kind_it->get<std::string>();
    if (kind == "put") {
        cfg.kind = PayoffKind::put;
    } else if (kind == "call") {
        cfg.kind = PayoffKind::call;
    } else if (kind == "constant") {
        cfg.kind = PayoffKind::constant;
    } else {
        parse_error(root + ".kind", "expected \"put\", \"call\" or \"constant\", got \"" + kind + "\"");
    }

    std::set<std::string> allowed{"sigma_low", "sigma_high", "rate", "kind", "t0",
                                  "maturity",  "n_list",     "spots", "outputs"};
    if (cfg.kind == PayoffKind::constant) {
        allowed.insert("constant");
    } else {
        allowed.insert({"strike", "penalty", "penalty_factor"});
    }
    reject_unknown(doc, root, allowed);

    cfg.interval.sigma_low = number(doc, "sigma_low", root);
    cfg.interval.sigma_high = number(doc, "sigma_high", root);
    cfg.option.rate = number(doc, "rate", root);
    if (cfg.kind == PayoffKind::constant) {
        cfg.constant = number(doc, "constant", root);
    } else {
        cfg.option.kind = cfg.kind == PayoffKind::put ? OptionKind::put : OptionKind::call;
        cfg.option.strike = number(doc, "strike", root);
        cfg.option.penalty = number(doc, "penalty", root);
        cfg.option.penalty_factor = number_or(doc, "penalty_factor", root, 1.0);
    }
    cfg.t0 = number_or(doc, "t0", root, 0.0);
    cfg.maturity = number(doc, "maturity", root);

    const auto n_it = doc.find("n_list");
    if (n_it == doc.end()) parse_error(root + ".n_list", "missing required field");
    if (!n_it->is_array()) parse_error(root + ".n_list", "expected an array of integers");
    for (std::size_t i = 0; i < n_it->size(); ++i) {
        const auto& v = (*n_it)[i];
        if (!v.is_number_integer()) parse_error(root + ".n_list[" + std::to_string(i) + "]", "expected an integer");
        const auto n = v.get<long long>();
        if (n < 1 || n > 1'000'000) {
            throw Error(ErrorCode::invalid_params,
                        root + ".n_list[" + std::to_string(i) + "]: n must lie in [1, 1000000]");
        }
        cfg.n_list.push_back(static_cast<int>(n));
    }

    const auto s_it = doc.find("spots");
    if (s_it == doc.end()) parse_error(root + ".spots", "missing required field");
    if (!s_it->is_array()) parse_error(root + ".spots", "expected an array of numbers");
    for (std::size_t i = 0; i < s_it->size(); ++i) {
        const auto& v = (*s_it)[i];
        if (!v.is_number()) parse_error(root + ".spots[" + std::to_string(i) + "]", "expected a number");
        cfg.spots.push_back(v.get<double>());
    }

    if (const auto out_it = doc.find("outputs"); out_it != doc.end()) {
        const std::string path = root + ".outputs";
        if (!out_it->is_object()) parse_error(path, "expected an object");
        reject_unknown(*out_it, path, {"csv", "svg", "grid_export"});
        cfg.outputs.csv = string_or_none(*out_it, "csv", path);
        cfg.outputs.svg = string_or_none(*out_it, "svg", path);
        if (const auto g = out_it->find("grid_export"); g != out_it->end()) {
            if (!g->is_boolean()) parse_error(path + ".grid_export", "expected a boolean");
            cfg.outputs.grid_export = g->get<bool>();
        }
    }

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config_parse, "cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace dynkin
