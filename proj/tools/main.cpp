#include "partcomb/harness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace partcomb;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

ordered_json partition_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Partition parse_partition_or_die(const std::string& s) {
    try {
        return Partition::parse(s);
    } catch (const std::exception& e) {
        std::cerr << "error: bad partition \"" << s << "\": " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

struct GlobalOpts {
    std::string format = "human";
    int order = -1;
    int n_max = -1;
    int degree_cap = -1;
    int jobs = 1;
    long long seed = -1;
};

void fill_common_params(Params& params, const GlobalOpts& g) {
    if (g.order >= 0) params.set("order", (long long)g.order);
    if (g.n_max >= 0) params.set("n_max", (long long)g.n_max);
    if (g.degree_cap >= 0) params.set("degree-cap", (long long)g.degree_cap);
    if (g.seed >= 0) params.set("seed", g.seed);
}

int cmd_decompose(const std::string& pstr, int t, const GlobalOpts& g) {
    Partition p = parse_partition_or_die(pstr);
    if (t < 1) {
        std::cerr << "error: -t must be >= 1\n";
        return kExitUsage;
    }
    Decomposition d = decompose(p, t);
    CoreVector v = kappa(d.core, t);
    if (g.format == "json") {
        ordered_json j;
        j["t"] = t;
        j["core"] = partition_json(d.core);
        ordered_json quot = ordered_json::array();
        for (const Partition& nu : d.quotient) quot.push_back(partition_json(nu));
        j["quotient"] = quot;
        std::cout << j.dump() << "\n";
        return kExitPass;
    }
    std::vector<std::string> kv;
    for (long long e : v.entries) kv.push_back(std::to_string(e));
    std::vector<std::string> quot;
    for (const Partition& nu : d.quotient) quot.push_back(nu.str().empty() ? "-" : nu.str());
    if (g.format == "tsv") {
        std::cout << d.core.str() << "\t" << join(quot, "|") << "\t" << join(kv, ",") << "\n";
        return kExitPass;
    }
    std::cout << "partition: " << (p.str().empty() ? "-" : p.str()) << "\n"
              << "word:      " << BoundaryWord::encode(p).render() << "\n"
              << "t:         " << t << "\n"
              << "core:      " << (d.core.str().empty() ? "-" : d.core.str()) << "\n"
              << "quotient:  " << join(quot, " | ") << "\n"
              << "kappa:     " << join(kv, ",") << "\n";
    return kExitPass;
}

int cmd_classify(const std::string& pstr, const std::vector<std::string>& class_strs,
                 const GlobalOpts& g) {
    Partition p = parse_partition_or_die(pstr);
    std::vector<std::pair<std::string, bool>> rows;
    for (const std::string& s : class_strs) {
        try {
            ClassSpec spec = ClassSpec::parse(s);
            rows.emplace_back(spec.str(), in_class(p, spec));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (g.format == "json") {
        ordered_json j;
        j["partition"] = partition_json(p);
        ordered_json memb = ordered_json::object();
        for (auto& [k, b] : rows) memb[k] = b;
        j["membership"] = memb;
        std::cout << j.dump() << "\n";
    } else if (g.format == "tsv") {
        for (auto& [k, b] : rows) std::cout << k << "\t" << (b ? "true" : "false") << "\n";
    } else {
        std::vector<std::string> verdicts;
        for (auto& [k, b] : rows) verdicts.push_back(b ? "true" : "false");
        std::cout << join(verdicts, ",") << "\n";
    }
    return kExitPass;
}

int cmd_enumerate(const std::string& class_str, int n, const GlobalOpts& g) {
    ClassSpec spec;
    try {
        spec = ClassSpec::parse(class_str);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (n < 0) {
        std::cerr << "error: --n must be >= 0\n";
        return kExitUsage;
    }
    std::vector<Partition> members = enumerate_class(spec, n);
    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Partition& p : members) arr.push_back(partition_json(p));
        std::cout << arr.dump() << "\n";
    } else {
        for (const Partition& p : members) std::cout << p.str() << "\n";
    }
    return kExitPass;
}

int cmd_series_class(const std::string& class_str, const GlobalOpts& g) {
    ClassSpec spec;
    try {
        spec = ClassSpec::parse(class_str);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const int N = g.order >= 0 ? g.order : 20;
    std::vector<std::string> coeffs;
    for (int n = 0; n <= N; ++n)
        coeffs.push_back(std::to_string(enumerate_class(spec, n).size()));
    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (auto& c : coeffs) arr.push_back(c);
        std::cout << arr.dump() << "\n";
    } else if (g.format == "tsv") {
        std::cout << join(coeffs, "\t") << "\n";
    } else {
        std::cout << join(coeffs, ",") << "\n";
    }
    return kExitPass;
}

int cmd_series_rhs(const std::string& id, int t, int z, const GlobalOpts& g) {
    Params params;
    if (t >= 0) params.set("t", (long long)t);
    if (z != INT32_MIN) params.set("z", (long long)z);
    fill_common_params(params, g);
    const int N = g.order >= 0 ? g.order : 20;
    int vcap = g.degree_cap;
    try {
        if (vcap < 0) vcap = (id == "NO" || id == "z-NO") ? 3 : 4;
        if (g.format == "json") {
            // Rational series give arrays of exact-rational strings; marked
            // series give one coefficient-array (marker degrees) per entry.
            ordered_json arr = ordered_json::array();
            bool marked = identity_is_marked(id);
            for (auto& row : rhs_coefficient_table(id, params, N, vcap)) {
                if (marked) {
                    ordered_json inner = ordered_json::array();
                    for (auto& c : row) inner.push_back(c);
                    arr.push_back(inner);
                } else {
                    arr.push_back(row[0]);
                }
            }
            std::cout << arr.dump() << "\n";
        } else {
            std::vector<std::string> coeffs = rhs_coefficient_strings(id, params, N, vcap);
            std::cout << join(coeffs, g.format == "tsv" ? "\t" : ",") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known identities: " << join(known_identity_ids(), ", ") << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

void print_report(const CheckReport& r, const std::string& format) {
    if (format == "json")
        std::cout << r.json() << "\n";
    else if (format == "tsv")
        std::cout << r.tsv() << "\n";
    else
        std::cout << r.human() << "\n";
}

int cmd_verify(const std::string& id, int t, int z, bool quick, const GlobalOpts& g) {
    try {
        if (id == "all") {
            std::vector<CatalogItem> items = verification_catalog(quick);
            std::vector<CheckReport> reports = run_catalog(items, g.jobs);
            bool all_pass = true;
            for (const CheckReport& r : reports) {
                print_report(r, g.format);
                all_pass = all_pass && r.pass;
            }
            if (g.format == "human")
                std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " ("
                          << reports.size() << " checks)\n";
            return all_pass ? kExitPass : kExitCheckFailed;
        }
        Params params;
        if (t >= 0) params.set("t", (long long)t);
        if (z != INT32_MIN) params.set("z", (long long)z);
        fill_common_params(params, g);

        CheckReport r;
        const auto& ids = known_identity_ids();
        const auto& congs = known_congruence_ids();
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
            r = run_identity(id, params);
        } else if (std::find(congs.begin(), congs.end(), id) != congs.end()) {
            r = run_congruence(id, params);
        } else if (id == "remark") {
            if (t < 0 || z == INT32_MIN) {
                std::cerr << "error: remark needs --t and --z\n";
                return kExitUsage;
            }
            r = remark_counterexample(z, t);
        } else if (id == "littlewood-scan") {
            r = littlewood_property_scan(g.n_max >= 0 ? g.n_max : 24, 2,
                                         t >= 0 ? t : 7);
        } else {
            std::cerr << "error: unknown check \"" << id << "\"\n"
                      << "identities:  " << join(known_identity_ids(), ", ") << "\n"
                      << "congruences: " << join(known_congruence_ids(), ", ") << "\n"
                      << "other:       remark, littlewood-scan, all\n";
            return kExitUsage;
        }
        print_report(r, g.format);
        return r.pass ? kExitPass : kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition combinatorics: hooks, Littlewood decomposition, "
                 "q-series identities and congruences"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "json", "tsv"}));
    app.add_option("--order", g.order, "series truncation order N");
    app.add_option("--n-max", g.n_max, "congruence scan bound");
    app.add_option("--degree-cap", g.degree_cap, "marker-variable degree cap D");
    app.add_option("--jobs", g.jobs, "parallel check jobs");
    app.add_option("--seed", g.seed, "seed for randomized weight tables");

    std::string pstr, class_str, id;
    std::vector<std::string> class_list;
    int t = -1, z = INT32_MIN, n = -1;
    bool quick = false;

    auto* dec = app.add_subcommand("decompose", "t-core and t-quotient of a partition");
    dec->add_option("-p,--partition", pstr, "comma-separated parts (empty for the empty partition)")
        ->required();
    dec->add_option("-t", t, "modulus")->required();

    auto* cls = app.add_subcommand("classify", "class membership of a partition");
    cls->add_option("-p,--partition", pstr)->required();
    cls->add_option("classes", class_list, "class specs: all, sc, pz:z, bgt:t, bgzt:z,t")
        ->required();

    auto* enu = app.add_subcommand("enumerate", "list all weight-n members of a class");
    enu->add_option("class", class_str, "class spec")->required();
    enu->add_option("-n,--n", n, "weight")->required();

    auto* ser = app.add_subcommand("series", "print series coefficients");
    auto* ser_class = ser->add_subcommand("class", "counting series of a class");
    ser_class->add_option("spec", class_str, "class spec")->required();
    auto* ser_rhs = ser->add_subcommand("rhs", "product-formula side of a catalog identity");
    ser_rhs->add_option("id", id, "identity id")->required();
    ser_rhs->add_option("--t", t, "modulus");
    ser_rhs->add_option("--z", z, "asymmetry");
    ser->require_subcommand(1);

    auto* ver = app.add_subcommand("verify", "run one check or the whole catalog");
    ver->add_option("id", id, "identity/congruence id, remark, littlewood-scan, or all")
        ->required();
    ver->add_option("--t", t, "modulus");
    ver->add_option("--z", z, "asymmetry");
    ver->add_flag("--quick", quick, "curated quick catalog (with id = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (dec->parsed()) return cmd_decompose(pstr, t, g);
        if (cls->parsed()) return cmd_classify(pstr, class_list, g);
        if (enu->parsed()) return cmd_enumerate(class_str, n, g);
        if (ser->parsed()) {
            if (ser_class->parsed()) return cmd_series_class(class_str, g);
            return cmd_series_rhs(id, t, z, g);
        }
        if (ver->parsed()) return cmd_verify(id, t, z, quick, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
