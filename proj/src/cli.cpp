#include "dseries/cli.hpp"

#include "dseries/charring.hpp"
#include "dseries/error.hpp"
#include "dseries/homology.hpp"
#include "dseries/orbits.hpp"
#include "dseries/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dseries::cli {

using nlohmann::json;

namespace {

Weight weight_from_json(const json& j, const char* field) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidConfig, std::string(field) + " must be an array");
    std::vector<Rational> coords;
    for (const json& x : j) {
        if (x.is_string()) {
            coords.push_back(parse_rational(x.get<std::string>()));
        } else if (x.is_number_integer()) {
            coords.emplace_back(x.get<long>());
        } else {
            throw Error(ErrorKind::InvalidConfig, std::string(field) + " entries must be strings or integers");
        }
    }
    return Weight(std::move(coords));
}

json weight_json(const Weight& w) { return w.to_strings(); }

std::string format_name(Format f) { return f == Format::json ? "json" : "tsv"; }


std::string signs_string(const std::vector<int>& signs, std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += ',';
        out += signs[i] > 0 ? '+' : '-';
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const Weight& require_lambda(const JobConfig& config) {
    if (!config.lambda) throw Error(ErrorKind::InvalidConfig, "this command needs lambda");
    return *config.lambda;
}

const ClosedOrbit& pick_orbit(const std::vector<ClosedOrbit>& orbits, const JobConfig& config) {
    if (!config.orbit_index) return orbits[reference_orbit_index(orbits)];
    int i = *config.orbit_index;
    if (i < 0 || static_cast<std::size_t>(i) >= orbits.size()) {
        throw Error(ErrorKind::InvalidConfig,
                    "orbit index " + std::to_string(i) + " out of range [0, " + std::to_string(orbits.size()) + ")");
    }
    return orbits[static_cast<std::size_t>(i)];
}

std::string describe(const EqualRankForm& form, Format fmt) {
    const RootSystem& rs = form.roots;
    const auto orbits = enumerate_closed_orbits(form);
    if (fmt == Format::tsv) {
        std::ostringstream out;
        out << "rank\t" << rs.rank() << "\n"
            << "positive_roots\t" << rs.num_positive_roots() << "\n"
            << "q\t" << form.grading.q() << "\n"
            << "dim_x\t" << form.dim_x() << "\n"
            << "dim_q\t" << form.k_weyl.dim_q() << "\n"
            << "weyl_order\t" << form.weyl.order() << "\n"
            << "weyl_k_order\t" << form.k_weyl.order() << "\n"
            << "closed_orbits\t" << orbits.size() << "\n"
            << "rho\t" << rs.rho().to_csv() << "\n"
            << "rho_c\t" << form.grading.rho_c().to_csv() << "\n"
            << "rho_n\t" << form.grading.rho_n().to_csv() << "\n";
        out << "root\tfw\ttype\n";
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            const Root& r = rs.positive_roots()[k];
            out << Weight::from_integers(r.root_coords).to_csv() << '\t' << r.weight().to_csv() << '\t'
                << (form.grading.is_compact(k) ? "compact" : "noncompact") << "\n";
        }
        return out.str();
    }
    json roots = json::array();
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const Root& r = rs.positive_roots()[k];
        roots.push_back({{"root", r.root_coords}, {"fw", r.fw_coords}, {"compact", form.grading.is_compact(k)}});
    }
    json j = {
        {"rank", rs.rank()},
        {"cartan", rs.cartan()},
        {"positive_roots", roots},
        {"rho", weight_json(rs.rho())},
        {"rho_c", weight_json(form.grading.rho_c())},
        {"rho_n", weight_json(form.grading.rho_n())},
        {"q", form.grading.q()},
        {"dim_x", form.dim_x()},
        {"dim_q", form.k_weyl.dim_q()},
        {"weyl_order", form.weyl.order()},
        {"weyl_k_order", form.k_weyl.order()},
        {"closed_orbits", orbits.size()},
    };
    return dump(j);
}

std::string orbits_output(const EqualRankForm& form, Format fmt) {
    const auto orbits = enumerate_closed_orbits(form);
    const std::size_t n = form.rank();
    if (fmt == Format::tsv) {
        std::ostringstream out;
        out << "orbit\tu\tsigns\tdim\tw\tcell\n";
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            for (const Stratum& s : orbits[i].strata) {
                out << i << '\t' << orbits[i].u.word_string() << '\t' << signs_string(orbits[i].positive_system, n)
                    << '\t' << s.dim << '\t' << s.w.word_string() << '\t' << s.cell.word_string() << "\n";
            }
        }
        return out.str();
    }
    json arr = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        json strata = json::array();
        for (const Stratum& s : orbits[i].strata) {
            strata.push_back({{"dim", s.dim}, {"w", s.w.word_string()}, {"cell", s.cell.word_string()}});
        }
        std::vector<int> simple(orbits[i].positive_system.begin(), orbits[i].positive_system.begin() + n);
        arr.push_back({{"index", i}, {"u", orbits[i].u.word_string()}, {"simple_signs", simple}, {"strata", strata}});
    }
    return dump(arr);
}

std::string table_output(const HomologyTable& table, Format fmt) {
    if (fmt == Format::tsv) {
        std::ostringstream out;
        out << "degree\tweight\n";
        for (const auto& [p, row] : table.rows()) {
            for (const Weight& w : row) out << p << '\t' << w.to_csv() << "\n";
        }
        return out.str();
    }
    json arr = json::array();
    for (const auto& [p, row] : table.rows()) {
        json weights = json::array();
        for (const Weight& w : row) weights.push_back(weight_json(w));
        arr.push_back({{"degree", p}, {"weights", weights}});
    }
    return dump(arr);
}

json character_terms(const FormalCharacter& ch) {
    json arr = json::array();
    for (const auto& [mu, c] : ch.terms()) arr.push_back({{"weight", weight_json(mu)}, {"coeff", c}});
    return arr;
}

std::string character_tsv(const FormalCharacter& ch) {
    std::ostringstream out;
    out << "weight\tcoeff\n";
    for (const auto& [mu, c] : ch.terms()) out << mu.to_csv() << '\t' << c << "\n";
    return out.str();
}

std::string character_output(const EqualRankForm& form, const JobConfig& config, Format fmt) {
    const std::string kind = config.kind.value_or(config.lambda ? "numerator" : "denominator");
    FormalCharacter ch;
    if (kind == "denominator") {
        ch = weyl_denominator(form.roots);
    } else if (kind == "numerator") {
        ch = weyl_numerator(form.roots, form.weyl, require_lambda(config));
    } else if (kind == "freudenthal") {
        ch = freudenthal_character(form.roots, require_lambda(config));
    } else if (kind == "discrete") {
        ch = discrete_numerator(form, require_lambda(config));
        const int q = form.grading.q();
        const int sign = q % 2 == 0 ? 1 : -1;
        if (fmt == Format::tsv) return "# q\t" + std::to_string(q) + "\n# sign\t" + std::to_string(sign) + "\n" + character_tsv(ch);
        return dump({{"q", q}, {"sign", sign}, {"terms", character_terms(ch)}});
    } else {
        throw Error(ErrorKind::InvalidConfig, "unknown character kind '" + kind + "'");
    }
    return fmt == Format::tsv ? character_tsv(ch) : dump(character_terms(ch));
}

std::string blattner_output(const EqualRankForm& form, const JobConfig& config, Format fmt, int& exit_code) {
    const Weight& lam = require_lambda(config);
    if (!config.nu_box) throw Error(ErrorKind::InvalidConfig, "blattner needs nu_box");
    if (config.nu_box->lo.rank() != form.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "nu_box rank does not match the root system");
    }
    const KTypeTable table = ktype_table(form, lam, *config.nu_box);
    std::optional<KTypeTable> oracle;
    std::map<Weight, std::pair<long long, long long>> rows;
    for (const auto& [nu, m] : table.entries) rows[nu].first = m;
    if (config.verify) {
        oracle = filtration_oracle_table(form, lam, *config.nu_box);
        for (const auto& [nu, m] : oracle->entries) rows[nu].second = m;
        for (const auto& [nu, both] : rows) {
            if (both.first != both.second) exit_code = 2;
        }
    }
    if (fmt == Format::tsv) {
        std::ostringstream out;
        out << "nu\tmultiplicity" << (config.verify ? "\toracle" : "") << "\n";
        for (const auto& [nu, both] : rows) {
            out << nu.to_csv() << '\t' << both.first;
            if (config.verify) out << '\t' << both.second;
            out << "\n";
        }
        return out.str();
    }
    json arr = json::array();
    for (const auto& [nu, both] : rows) {
        json row = {{"nu", weight_json(nu)}, {"multiplicity", both.first}};
        if (config.verify) row["oracle"] = both.second;
        arr.push_back(row);
    }
    return dump(arr);
}

std::string verify_output(const EqualRankForm& form, const JobConfig& config, Format fmt, int& exit_code) {
    VerifyOptions options;
    options.threads = config.threads;
    options.lambda = config.lambda;
    const auto results = run_verify(form, options);
    const bool ok = all_passed(results);
    if (!ok) exit_code = 2;
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    const std::string summary = std::to_string(passed) + "/" + std::to_string(results.size());
    if (fmt == Format::json) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back({{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        return dump({{"properties", arr}, {"passed", ok}, {"summary", summary}});
    }
    std::ostringstream out;
    out << "property\tstatus\tdetail\n";
    for (const auto& r : results) out << r.name << '\t' << (r.passed ? "pass" : "FAIL") << '\t' << r.detail << "\n";
    out << "summary\t" << (ok ? "pass" : "FAIL") << '\t' << summary << "\n";
    return out.str();
}

RunResult error_result(const std::string& kind, const std::string& message, int code) {
    return {code, json{{"error", kind}, {"message", message}}.dump() + "\n"};
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    throw Error(ErrorKind::InvalidConfig, "format must be json or tsv, got '" + s + "'");
}

std::vector<bool> parse_compact_flags(std::string_view text) {
    std::vector<bool> out;
    std::string s(text);
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "+" || tok == "c" || tok == "1" || tok == "true") {
            out.push_back(true);
        } else if (tok == "-" || tok == "n" || tok == "0" || tok == "false") {
            out.push_back(false);
        } else {
            throw Error(ErrorKind::InvalidConfig, "compact flag '" + tok + "' is not one of + - c n 1 0 true false");
        }
    }
    return out;
}

JobConfig parse_config(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
    static const std::vector<std::string> known = {"cartan", "system",  "compact_simple", "lambda", "nu_box",
                                                   "orbit_index", "kind", "format",  "verify", "threads"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw Error(ErrorKind::InvalidConfig, "unknown config key '" + key + "'");
        }
    }
    JobConfig c;
    try {
        if (j.contains("cartan")) {
            c.cartan = j.at("cartan").get<IntMatrix>();
        } else if (j.contains("system")) {
            c.cartan = cartan_matrix(j.at("system").get<std::string>());
        } else {
            throw Error(ErrorKind::InvalidConfig, "config needs cartan or system");
        }
        if (j.contains("compact_simple")) {
            c.compact_simple = j.at("compact_simple").get<std::vector<bool>>();
        } else {
            c.compact_simple.assign(c.cartan.size(), true);
        }
        if (j.contains("lambda")) c.lambda = weight_from_json(j.at("lambda"), "lambda");
        if (j.contains("nu_box")) {
            const json& b = j.at("nu_box");
            if (b.is_string()) {
                c.nu_box = WeightBox::parse(b.get<std::string>());
            } else {
                WeightBox box{weight_from_json(b.at("lo"), "nu_box.lo"), weight_from_json(b.at("hi"), "nu_box.hi")};
                if (box.lo.rank() != box.hi.rank()) {
                    throw Error(ErrorKind::DimensionMismatch, "nu_box corners differ in rank");
                }
                c.nu_box = std::move(box);
            }
        }
        if (j.contains("orbit_index")) c.orbit_index = j.at("orbit_index").get<int>();
        if (j.contains("kind")) c.kind = j.at("kind").get<std::string>();
        if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("verify")) c.verify = j.at("verify").get<bool>();
        if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidConfig, e.what());
    }
    return c;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidConfig, e.what());
    }
    return parse_config(j);
}

json to_json(const JobConfig& c) {
    json j = {{"cartan", c.cartan}, {"compact_simple", c.compact_simple}};
    if (c.lambda) j["lambda"] = weight_json(*c.lambda);
    if (c.nu_box) j["nu_box"] = {{"lo", weight_json(c.nu_box->lo)}, {"hi", weight_json(c.nu_box->hi)}};
    if (c.orbit_index) j["orbit_index"] = *c.orbit_index;
    if (c.kind) j["kind"] = *c.kind;
    if (c.format) j["format"] = format_name(*c.format);
    if (c.verify) j["verify"] = true;
    if (c.threads != 1) j["threads"] = c.threads;
    return j;
}

RunResult run(const std::string& command, const JobConfig& config) {
    try {
        const EqualRankForm form = EqualRankForm::make(config.cartan, config.compact_simple);
        if (config.lambda && config.lambda->rank() != form.rank()) {
            throw Error(ErrorKind::DimensionMismatch, "lambda rank does not match the root system");
        }
        const bool structured = command == "describe" || command == "character";
        const Format fmt = config.format.value_or(structured ? Format::json : Format::tsv);
        RunResult r;
        if (command == "describe") {
            r.output = describe(form, fmt);
        } else if (command == "orbits") {
            r.output = orbits_output(form, fmt);
        } else if (command == "kostant") {
            r.output = table_output(kostant_table(form.roots, form.weyl, require_lambda(config)), fmt);
        } else if (command == "schmid") {
            const auto orbits = enumerate_closed_orbits(form);
            r.output = table_output(schmid_table(form, pick_orbit(orbits, config), require_lambda(config)), fmt);
        } else if (command == "character") {
            r.output = character_output(form, config, fmt);
        } else if (command == "blattner") {
            r.output = blattner_output(form, config, fmt, r.exit_code);
        } else if (command == "verify") {
            r.output = verify_output(form, config, fmt, r.exit_code);
        } else {
            throw Error(ErrorKind::InvalidConfig, "unknown command '" + command + "'");
        }
        return r;
    } catch (const Error& e) {
        return error_result(std::string(e.kind_name()), e.what(), e.kind() == ErrorKind::InternalInvariant ? 2 : 1);
    } catch (const std::exception& e) {
        return error_result("InternalInvariant", e.what(), 2);
    }
}

}  // namespace dseries::cli
