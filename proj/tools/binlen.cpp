#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "binlen/formio.hpp"
#include "binlen/identities.hpp"
#include "binlen/oracle.hpp"

namespace {

using namespace binlen;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

BinaryForm read_form(const std::string& form_text, const std::string& coeffs_text) {
    if (!form_text.empty() && !coeffs_text.empty())
        throw ParseError("give either --form or --coeffs, not both");
    if (!form_text.empty()) return parse_form(form_text);
    if (!coeffs_text.empty()) return parse_coeffs(coeffs_text);
    throw ParseError("missing --form or --coeffs");
}

FieldDescriptor read_field(const std::string& text) {
    auto K = FieldDescriptor::parse(text);
    if (!K) throw ParseError("bad field descriptor '" + text + "'");
    return *K;
}

std::string cache_key(const BinaryForm& f, const FieldDescriptor& K, long height) {
    Json key = Json::array();
    for (int i = 0; i <= f.degree(); ++i) key.push_back(rational_to_json(f.normalized(i)));
    Json j;
    j["coeffs"] = std::move(key);
    j["field"] = K.str();
    j["height"] = height;
    return j.dump();
}

/// Append-only JSON-lines cache of length results keyed by normalized
/// coefficients, field and height.
class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json row = Json::parse(line);
            entries_[row.at("key").dump()] = row.at("result");
        }
    }

    std::optional<Json> lookup(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return std::optional<Json>(std::in_place, it->second);
    }

    void store(const std::string& key, const Json& result) {
        Json row;
        row["key"] = Json::parse(key);
        row["result"] = result;
        std::ofstream out(path_, std::ios::app);
        out << row.dump() << "\n";
        entries_[key] = result;
    }

    /// Recomputes a deterministic 10% sample; returns the number of
    /// mismatches.
    int audit(long height) const {
        if (entries_.empty()) return 0;
        std::vector<std::string> keys;
        for (const auto& [k, v] : entries_) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        std::mt19937 rng(0xb1a5);
        std::shuffle(keys.begin(), keys.end(), rng);
        std::size_t sample = std::max<std::size_t>(1, keys.size() / 10);
        int mismatches = 0;
        for (std::size_t i = 0; i < sample; ++i) {
            Json key = Json::parse(keys[i]);
            std::vector<Rational> normalized;
            for (const auto& c : key.at("coeffs")) {
                auto r = Rational::parse(c.get<std::string>());
                normalized.push_back(*r);
            }
            BinaryForm f = BinaryForm::from_normalized(
                static_cast<int>(normalized.size()) - 1, normalized);
            auto K = FieldDescriptor::parse(key.at("field").get<std::string>());
            long h = key.at("height").get<long>();
            auto res = length_over(f, *K, h);
            Json recomputed = length_result_to_json(f, *K, res).at("length");
            Json cached = entries_.at(keys[i]).at("length");
            if (recomputed.at("lower") != cached.at("lower") ||
                recomputed.at("upper") != cached.at("upper") ||
                recomputed.at("exact") != cached.at("exact")) {
                ++mismatches;
                std::cerr << "cache audit mismatch for " << keys[i] << "\n";
            }
        }
        (void)height;
        return mismatches;
    }

private:
    std::string path_;
    std::map<std::string, Json> entries_;
};

void print_length_text(const BinaryForm& f, const FieldDescriptor& K, const LengthResult& res) {
    std::cout << "form: " << f.str() << "\n";
    std::cout << "field: " << K.str() << "\n";
    if (res.exact) {
        std::cout << "length: " << res.lower << " (exact)\n";
    } else {
        std::cout << "length: in [" << res.lower << ", " << res.upper << "]\n";
    }
    std::cout << "lower bound: " << res.lower_provenance << "\n";
    std::cout << "upper bound: " << res.upper_provenance << "\n";
    if (res.witness) {
        std::cout << "representation (over " << res.witness->field().str() << "):\n";
        for (const auto& term : res.witness->terms())
            std::cout << "  " << term.lambda.str() << " * (" << term.form.str() << ")^"
                      << res.witness->degree() << "\n";
    }
}

int run_length(const std::string& form_text, const std::string& coeffs_text,
               const std::string& field_text, long height, bool json,
               const std::string& cache_path, bool audit) {
    BinaryForm f = read_form(form_text, coeffs_text);
    FieldDescriptor K = read_field(field_text);
    std::optional<ResultCache> cache;
    if (!cache_path.empty()) cache.emplace(cache_path);
    if (cache && audit) {
        if (cache->audit(height) != 0) return kExitError;
    }
    std::string key = cache_key(f, K, height);
    Json out;
    if (cache) {
        if (auto hit = cache->lookup(key)) out = *hit;
    }
    LengthResult res;
    bool computed = false;
    if (out.is_null()) {
        res = length_over(f, K, height);
        out = length_result_to_json(f, K, res);
        computed = true;
        if (cache) cache->store(key, out);
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else if (computed) {
        print_length_text(f, K, res);
    } else {
        std::cout << out.dump(2) << "\n";
    }
    bool exact = out.at("length").at("exact").get<bool>();
    return exact ? kExitOk : kExitInconclusive;
}

int run_represent(const std::string& form_text, const std::string& coeffs_text,
                  const std::string& field_text, long height, bool json) {
    BinaryForm f = read_form(form_text, coeffs_text);
    FieldDescriptor K = read_field(field_text);
    auto res = length_over(f, K, height);
    if (json) {
        Json out = length_result_to_json(f, K, res);
        std::cout << out.dump(2) << "\n";
    } else {
        print_length_text(f, K, res);
    }
    if (!res.witness) return kExitInconclusive;
    return res.exact ? kExitOk : kExitInconclusive;
}

int run_cabinet(const std::string& form_text, const std::string& coeffs_text,
                const std::string& fields_text, long height, bool json) {
    BinaryForm f = read_form(form_text, coeffs_text);
    std::vector<FieldDescriptor> fields;
    std::size_t i = 0;
    while (i <= fields_text.size()) {
        std::size_t j = fields_text.find(',', i);
        if (j == std::string::npos) j = fields_text.size();
        fields.push_back(read_field(fields_text.substr(i, j - i)));
        i = j + 1;
        if (j == fields_text.size()) break;
    }
    auto cab = cabinet(f, fields, height);
    if (json) {
        std::cout << cabinet_to_json(f, cab).dump(2) << "\n";
    } else {
        std::cout << "form: " << f.str() << "\n";
        for (const auto& [K, res] : cab.entries) {
            std::cout << "  " << K.str() << ": ";
            if (res.exact)
                std::cout << res.lower << " (exact)";
            else
                std::cout << "[" << res.lower << ", " << res.upper << "]";
            std::cout << "\n";
        }
        std::cout << "cabinet: {";
        bool first = true;
        for (int v : cab.summary) {
            std::cout << (first ? "" : ",") << v;
            first = false;
        }
        std::cout << "}\n";
    }
    bool all_exact = true;
    for (const auto& [K, res] : cab.entries) all_exact = all_exact && res.exact;
    return all_exact ? kExitOk : kExitInconclusive;
}

int run_verify(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j = Json::parse(in);
    try {
        auto rep = representation_from_json(j);
        BinaryForm expanded = expand_representation(rep);
        bool ok = expanded == rep.target();
        if (json) {
            Json out;
            out["ok"] = ok;
            out["expanded"] = form_to_json(expanded);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (ok ? "ok: " : "mismatch: ") << "expansion = " << expanded.str()
                      << "\n";
        }
        return ok ? kExitOk : kExitError;
    } catch (const std::invalid_argument& e) {
        if (json) {
            Json out;
            out["ok"] = false;
            out["error"] = e.what();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "invalid representation: " << e.what() << "\n";
        }
        return kExitError;
    }
}

int run_oracle(const std::string& form_text, const std::string& coeffs_text, long height,
               int max_r, bool json) {
    BinaryForm f = read_form(form_text, coeffs_text);
    SearchBudget budget{height, max_r};
    auto found = brute_force_min_length_Q(f, budget);
    if (json) {
        Json out;
        out["form"] = form_to_json(f);
        out["height"] = height;
        out["found"] = found.has_value();
        if (found) {
            out["r"] = found->first;
            out["representation"] = representation_to_json(found->second)["terms"];
        }
        std::cout << out.dump(2) << "\n";
    } else if (found) {
        std::cout << "r = " << found->first << "\n";
        for (const auto& term : found->second.terms())
            std::cout << "  " << term.lambda.str() << " * (" << term.form.str() << ")^"
                      << f.degree() << "\n";
    } else {
        std::cout << "no representation within the budget\n";
    }
    return found ? kExitOk : kExitInconclusive;
}

int run_gamma(long a, long b, long bound, bool json) {
    Int A(a), B(b);
    auto witness = gamma_square_search(A, B, bound);
    if (json) {
        Json out;
        out["a"] = a;
        out["b"] = b;
        out["bound"] = bound;
        out["found"] = witness.has_value();
        if (witness) {
            out["m"] = witness->m.get_str();
            out["n"] = witness->n.get_str();
            out["root"] = witness->root.get_str();
        }
        std::cout << out.dump(2) << "\n";
    } else if (witness) {
        std::cout << "gamma(" << a << "," << b << "," << witness->m.get_str() << ","
                  << witness->n.get_str() << ") = " << witness->root.get_str() << "^2\n";
    } else {
        std::cout << "no square value up to bound " << bound << "\n";
    }
    return witness ? kExitOk : kExitInconclusive;
}

int run_identities(bool json) {
    auto report = run_identity_suite();
    if (json) {
        Json out = Json::array();
        for (const auto& row : report.rows) {
            Json r;
            r["id"] = row.id;
            r["description"] = row.description;
            r["pass"] = row.pass;
            if (!row.pass) r["error"] = row.error;
            out.push_back(std::move(r));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& row : report.rows)
            std::cout << (row.pass ? "PASS" : "FAIL") << " " << row.id
                      << (row.pass ? "" : ": " + row.error) << "\n";
    }
    return report.all_pass ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Waring-length computations for binary forms"};
    app.require_subcommand(1);

    std::string form_text, coeffs_text, field_text = "Q", fields_text = "Q,R,C";
    std::string cache_path, repr_path;
    long height = 64, bound = 100, a = 0, b = 0;
    int max_r = 0;
    bool json = false, audit = false;

    auto add_form_opts = [&](CLI::App* cmd) {
        cmd->add_option("--form", form_text, "form as signed monomials, e.g. 3x^5-20x^3y^2+10xy^4");
        cmd->add_option("--coeffs", coeffs_text, "raw coefficients, descending x power");
        cmd->add_flag("--json", json, "emit JSON");
    };

    auto* length = app.add_subcommand("length", "length of a form over a field");
    add_form_opts(length);
    length->add_option("--field", field_text, "Q, Q(sqrt d), Q(i), R or C");
    length->add_option("--height", height, "kernel search height bound");
    length->add_option("--cache", cache_path, "JSON-lines result cache");
    length->add_flag("--audit", audit, "recompute a 10% cache sample first");

    auto* represent = app.add_subcommand("represent", "length plus an explicit representation");
    add_form_opts(represent);
    represent->add_option("--field", field_text, "Q, Q(sqrt d), Q(i), R or C");
    represent->add_option("--height", height, "kernel search height bound");

    auto* cab = app.add_subcommand("cabinet", "lengths over a list of fields");
    add_form_opts(cab);
    cab->add_option("--fields", fields_text, "comma-separated field list");
    cab->add_option("--height", height, "kernel search height bound");

    auto* verify = app.add_subcommand("verify", "expand a representation file and compare");
    verify->add_option("--repr", repr_path, "representation JSON file")->required();
    verify->add_flag("--json", json, "emit JSON");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimal length over Q");
    add_form_opts(oracle_cmd);
    oracle_cmd->add_option("--height", height, "max coefficient of candidate forms");
    oracle_cmd->add_option("--max-r", max_r, "cap on the number of summands");

    auto* gamma_cmd = app.add_subcommand("gamma", "quartic diophantine square search");
    gamma_cmd->add_option("--a", a, "numerator of lambda")->required();
    gamma_cmd->add_option("--b", b, "denominator of lambda")->required();
    gamma_cmd->add_option("--bound", bound, "search bound for (m, n)");
    gamma_cmd->add_flag("--json", json, "emit JSON");

    auto* ident = app.add_subcommand("paper-identities", "run the pinned identity corpus");
    ident->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(length))
            return run_length(form_text, coeffs_text, field_text, height, json, cache_path,
                              audit);
        if (app.got_subcommand(represent))
            return run_represent(form_text, coeffs_text, field_text, height, json);
        if (app.got_subcommand(cab))
            return run_cabinet(form_text, coeffs_text, fields_text, height, json);
        if (app.got_subcommand(verify)) return run_verify(repr_path, json);
        if (app.got_subcommand(oracle_cmd))
            return run_oracle(form_text, coeffs_text, height, max_r, json);
        if (app.got_subcommand(gamma_cmd)) return run_gamma(a, b, bound, json);
        if (app.got_subcommand(ident)) return run_identities(json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
