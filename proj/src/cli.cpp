#include "swkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/siegel_weil.hpp"
#include "swkit/suites.hpp"
#include "swkit/weyl.hpp"

namespace swkit::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "swkit/1";
constexpr long kMaxQ = 1'000'000;
constexpr int kMaxDerivative = 1000;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw InputError("unexpected field '" + key + "' in " + where);
}

long get_int(const json& obj, const std::string& key, long lo, long hi) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw InputError("field '" + key + "' must be an integer");
    const long x = v.get<long>();
    if (x < lo || x > hi) throw InputError("field '" + key + "' = " + std::to_string(x) + " out of range");
    return x;
}

PlaceKind parse_kind(const json& v) {
    if (!v.is_string()) throw InputError("field 'kind' must be a string");
    const auto s = v.get<std::string>();
    if (s == "inert") return PlaceKind::Inert;
    if (s == "split") return PlaceKind::Split;
    if (s == "ramified") throw UnsupportedRamified("ramified places are not supported");
    throw InputError("kind must be \"inert\" or \"split\", got \"" + s + "\"");
}

Partition parse_lambda(const json& v) {
    if (!v.is_array()) throw InputError("field 'lambda' must be an array");
    std::vector<int> parts;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw InputError("lambda entries must be integers");
        const long part = x.get<long>();
        if (part < 1 || part > 1000) throw InputError("lambda entries must be positive");
        parts.push_back(static_cast<int>(part));
    }
    Partition p(parts);
    if (p.size() > scaled_guard(GuardDefaults::kPartitionSize))
        throw GuardExceeded("|lambda| = " + std::to_string(p.size()) + " above the partition-size limit");
    return p;
}

PlaceDatum parse_place(const json& obj) {
    if (!obj.is_object()) throw InputError("each place must be an object");
    check_keys(obj, {"deg", "kind", "lambda"}, "place");
    if (!obj.contains("kind") || !obj.contains("lambda")) throw InputError("a place needs 'kind' and 'lambda'");
    PlaceDatum p;
    p.deg_v = obj.contains("deg") ? static_cast<int>(get_int(obj, "deg", 1, 64)) : 1;
    p.kind = parse_kind(obj.at("kind"));
    p.lambda = parse_lambda(obj.at("lambda"));
    return p;
}

json lambda_json(const Partition& p) { return p.parts(); }

json base_doc(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

long place_order(long q, int deg) {
    const BigInt qv = pow_big(BigInt(q), static_cast<unsigned long>(deg));
    if (!qv.fits_slong_p()) throw GuardExceeded("q^deg too large");
    return qv.get_si();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw InputError("cannot open output file " + tmp.string());
        os << text;
        if (!os.flush()) throw InputError("cannot write output file " + tmp.string());
    }
    fs::rename(tmp, target);
}

json read_input(const std::string& path, bool required) {
    std::string text;
    if (path.empty() && !required) return json::object();
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw InputError("cannot read input file " + path);
        std::stringstream ss;
        ss << is.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

JobSpec parse_job(const std::string& command, const json& doc) {
    if (!doc.is_object()) throw InputError("input must be a JSON object");
    JobSpec job;
    job.command = command;
    std::set<std::string> allowed{"schema", "guard_scale"};
    if (command == "den") allowed.insert({"q", "n", "places", "kind", "lambda", "deg"});
    else if (command == "derivative") allowed.insert({"q", "n", "places", "r", "r_max"});
    else if (command == "verify") allowed.insert({"suite", "budget"});
    else if (command == "selftest") allowed.insert({"budget"});
    else throw InputError("unknown command '" + command + "'");
    check_keys(doc, allowed, "input");

    if (doc.contains("schema") && doc.at("schema") != kSchema) throw InputError("unsupported schema, expected \"swkit/1\"");
    if (doc.contains("guard_scale")) {
        const auto& v = doc.at("guard_scale");
        if (!v.is_number() || v.get<double>() <= 0) throw InputError("guard_scale must be a positive number");
        job.guard_scale = v.get<double>();
    }
    if (doc.contains("budget")) job.budget = static_cast<int>(get_int(doc, "budget", 0, 1000));
    if (doc.contains("suite")) {
        if (!doc.at("suite").is_string()) throw InputError("suite must be a string");
        job.suite = doc.at("suite").get<std::string>();
        default_budget(job.suite);
    }

    if (command == "den" || command == "derivative") {
        if (!doc.contains("q")) throw InputError("field 'q' is required");
        job.q = get_int(doc, "q", 2, kMaxQ);
        const bool local = doc.contains("kind") || doc.contains("lambda") || doc.contains("deg");
        if (local && doc.contains("places")) throw InputError("give either 'places' or a single 'kind'/'lambda'");
        if (local) {
            json place = json::object();
            for (const char* key : {"deg", "kind", "lambda"})
                if (doc.contains(key)) place[key] = doc.at(key);
            job.local = parse_place(place);
            GlobalHermDatum g{job.q, 1, {}};
            g.validate();
        } else {
            GlobalHermDatum g;
            g.q = job.q;
            g.n = doc.contains("n") ? static_cast<int>(get_int(doc, "n", 1, 1000)) : 1;
            if (doc.contains("places")) {
                if (!doc.at("places").is_array()) throw InputError("field 'places' must be an array");
                for (const auto& p : doc.at("places")) g.places.push_back(parse_place(p));
            }
            g.validate();
            job.datum = g;
        }
    }
    if (command == "derivative") {
        if (doc.contains("r") && doc.contains("r_max")) throw InputError("give either 'r' or 'r_max'");
        if (doc.contains("r")) {
            const auto& r = doc.at("r");
            job.r_list.clear();
            if (r.is_array()) {
                for (const auto& x : r) {
                    if (!x.is_number_integer() || x.get<long>() < 0 || x.get<long>() > kMaxDerivative)
                        throw InputError("entries of 'r' must be integers in 0.." + std::to_string(kMaxDerivative));
                    job.r_list.push_back(x.get<int>());
                }
            } else {
                job.r_list.push_back(static_cast<int>(get_int(doc, "r", 0, kMaxDerivative)));
            }
        } else if (doc.contains("r_max")) {
            job.r_list.clear();
            const int r_max = static_cast<int>(get_int(doc, "r_max", 0, kMaxDerivative));
            for (int r = 0; r <= r_max; ++r) job.r_list.push_back(r);
        }
    }
    return job;
}

json datum_to_json(const GlobalHermDatum& g) {
    json places = json::array();
    for (const auto& p : g.places) places.push_back(json{{"deg", p.deg_v}, {"kind", to_string(p.kind)}, {"lambda", lambda_json(p.lambda)}});
    return json{{"q", g.q}, {"n", g.n}, {"places", places}};
}

CommandResult cmd_den(const JobSpec& job) {
    CommandResult res;
    res.doc = base_doc("den");
    IntPoly poly;
    if (job.local) {
        const auto& p = *job.local;
        poly = den_local(p.kind, place_order(job.q, p.deg_v), p.lambda).substitute_power(p.deg_v);
        res.doc["q"] = job.q;
        res.doc["kind"] = to_string(p.kind);
        res.doc["deg"] = p.deg_v;
        res.doc["lambda"] = lambda_json(p.lambda);
        res.doc["d"] = p.deg_v * p.lambda.size();
    } else {
        if (!job.datum) throw InputError("den needs a datum");
        poly = den_global(*job.datum);
        res.doc.update(datum_to_json(*job.datum));
        res.doc["d"] = job.datum->d();
    }
    res.doc["coeffs"] = poly.decimal_coeffs();
    return res;
}

CommandResult cmd_derivative(const JobSpec& job) {
    if (!job.datum) throw InputError("derivative needs a global datum");
    const auto& g = *job.datum;
    CommandResult res;
    res.doc = base_doc("derivative");
    res.doc.update(datum_to_json(g));
    res.doc["d"] = g.d();
    res.doc["coeffs"] = normalized_coefficient(g).decimal_coeffs();
    const auto sym = symmetry_sign(g);
    res.doc["symmetry_sign"] = sym.sign;
    res.doc["symmetry_holds"] = sym.holds;
    const int rank = std::min(g.d(), 6);
    if (!ensure_main_identity(rank)) throw IdentityNotVerified("W_" + std::to_string(rank) + " identity failed");
    json records = json::array();
    for (int r : job.r_list) {
        const auto a = analytic_value(g, r), b = geometric_degree(g, r);
        records.push_back(json{{"r", r}, {"analytic", to_decimal(a)}, {"geometric", to_decimal(b)}, {"equal", a == b}});
        if (a != b) res.exit_code = kVerificationFailed;
    }
    res.doc["records"] = records;
    return res;
}

CommandResult cmd_verify(const JobSpec& job) {
    const auto suite = run_suite(job.suite, job.budget);
    CommandResult res;
    res.doc = base_doc("verify");
    res.doc["suite"] = suite.suite;
    if (suite.budget >= 0) res.doc["budget"] = suite.budget;
    res.doc["pass"] = suite.pass();
    res.doc["total"] = suite.checks.size();
    res.doc["failed"] = suite.failures();
    json checks = json::array();
    for (const auto& c : suite.checks)
        checks.push_back(json{{"name", c.name}, {"inputs", c.inputs}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    res.doc["checks"] = checks;
    res.exit_code = suite.pass() ? kOk : kVerificationFailed;
    return res;
}

CommandResult cmd_selftest(const JobSpec& job, std::ostream& table) {
    AcceptanceOptions opts;
    if (job.budget >= 0) opts.weyl_max_d = job.budget;
    table << "swkit selftest (Weyl checks up to d = " << opts.weyl_max_d << ")\n";
    const auto results = run_acceptance(opts, [&](const CriterionResult& r) { table << format_criterion(r) << "\n" << std::flush; });
    CommandResult res;
    res.doc = base_doc("selftest");
    bool pass = true;
    json criteria = json::array();
    for (const auto& r : results) {
        pass = pass && r.pass;
        criteria.push_back(json{{"id", r.id},
                                {"title", r.title},
                                {"pass", r.pass},
                                {"seconds", r.seconds},
                                {"limit_seconds", r.limit_seconds},
                                {"checks", r.checks},
                                {"failed", r.failed},
                                {"detail", r.detail}});
    }
    res.doc["pass"] = pass;
    res.doc["criteria"] = criteria;
    table << (pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    res.exit_code = pass ? kOk : kVerificationFailed;
    return res;
}

int run(int argc, char** argv) {
    CLI::App app{"swkit: local densities, Springer traces and W_d characters"};
    app.require_subcommand(1);
    std::string input, out, suite;
    int budget = -1;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "JSON input file ('-' for stdin)");
        sub->add_option("--budget", budget, "size parameter of the checks")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", out, "write the JSON result here instead of stdout");
    };
    auto* den = app.add_subcommand("den", "local or global density polynomial");
    auto* derivative = app.add_subcommand("derivative", "central derivatives, analytic and geometric");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    for (auto* sub : {den, derivative, verify, selftest}) add_common(sub);
    verify->add_option("suite", suite, "cy | fe | weyl | springer | qbinom | oracle | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    auto fail = [&](int code, const std::string& type, const std::string& message) {
        json err = base_doc(command);
        err["error"] = json{{"type", type}, {"message", message}};
        std::cerr << err.dump() << "\n";
        return code;
    };
    try {
        const bool needs_input = command == "den" || command == "derivative";
        auto job = parse_job(command, read_input(input, needs_input));
        if (!suite.empty()) {
            default_budget(suite);
            job.suite = suite;
        }
        if (budget >= 0) job.budget = budget;
        job.out_path = out;
        if (job.guard_scale) set_guard_scale(*job.guard_scale);

        CommandResult res;
        if (command == "den") res = cmd_den(job);
        else if (command == "derivative") res = cmd_derivative(job);
        else if (command == "verify") res = cmd_verify(job);
        else res = cmd_selftest(job, std::cout);

        if (command != "selftest" || !out.empty()) write_output(out, res.doc.dump(2) + "\n");
        return res.exit_code;
    } catch (const GuardExceeded& e) {
        return fail(kGuardExceeded, "guard", e.what());
    } catch (const InputError& e) {
        return fail(kInputError, "input", e.what());
    } catch (const json::exception& e) {
        return fail(kInputError, "input", e.what());
    } catch (const Error& e) {
        return fail(kVerificationFailed, "computation", e.what());
    } catch (const std::exception& e) {
        return fail(kVerificationFailed, "internal", e.what());
    }
}

}  // namespace swkit::cli
