#pragma once

#include "partcomb/classes.hpp"
#include "partcomb/series.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace partcomb {

// Rational-valued weight on hook lengths, total on 1..domain_max for the
// table preset and on all positive integers otherwise.
class HookWeight {
public:
    static HookWeight one();
    static HookWeight indicator(int value);
    static HookWeight power(int beta);  // h -> h^beta, beta in {0,1,2}
    static HookWeight random_table(int domain_max, std::uint64_t seed);
    // "one" | "indicator:<v>" | "power:<beta>" | "table"
    static HookWeight parse(const std::string& spec, int domain_max, std::uint64_t seed);

    Rat operator()(long long h) const;
    const std::string& name() const { return name_; }

private:
    enum class Kind { One, Indicator, Power, Table };
    Kind kind_ = Kind::One;
    int value_ = 0;
    std::vector<Rat> table_;
    std::string name_ = "one";
};

// Statistic markers attached to a class generating function.
struct Marks {
    bool x_mark = false;  // x^{|H_t(lambda)|}
    bool y_mark = false;  // y^{n_t(lambda)}
    enum class NoWeight { Off, Full, Halved };
    NoWeight no_weight = NoWeight::Off;  // prod over H_t of (1 - u/h^2), or its square root
    std::optional<HookWeight> rho1;      // multiplicative: prod over H_t of rho1(h)
    std::optional<HookWeight> rho2;      // additive: sum over H_t of rho2(h)
};

// Loose string-keyed parameter bag; echoed verbatim into reports.
class Params {
public:
    Params() = default;
    Params& set(const std::string& k, const std::string& v);
    Params& set(const std::string& k, long long v);
    bool has(const std::string& k) const;
    long long get_int(const std::string& k, long long dflt) const;
    std::string get_str(const std::string& k, const std::string& dflt) const;
    const std::map<std::string, std::string>& raw() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

struct Witness {
    int n = 0;
    std::string lhs, rhs;
};

// Machine-readable verdict of one check, with the first discrepant
// coefficient when failing.
struct CheckReport {
    std::string id;
    Params params;
    bool pass = false;
    int max_order_checked = 0;
    std::optional<Witness> witness;
    long long elapsed_ms = 0;
    std::string note;  // human-format extra; not part of the JSON schema

    std::string json() const;
    std::string human() const;
    std::string tsv() const;
};

// Sum over all class members of weight <= order of the weighted monomial.
Series<Rat> class_statistic_series(const ClassSpec& cls, int t, int order,
                                   const HookWeight* rho1, const HookWeight* rho2);
Series<MarkPoly> class_statistic_series_marked(const ClassSpec& cls, int t, int order,
                                               const Marks& marks, int vcap);

// The two auxiliary series of the addition-multiplication theorems, built by
// enumeration over all partitions:
//   f_t(q) = sum_lambda q^{|lambda|} prod_{h in H(lambda)} rho1(t h)^2
//   g_t(q) = sum_lambda q^{|lambda|} prod_{h in H(lambda)} rho1(t h)^2
//                                    * sum_{h in H(lambda)} rho2(t h)
Series<Rat> ft_series(int t, int order, const HookWeight& rho1);
Series<Rat> gt_series(int t, int order, const HookWeight& rho1, const HookWeight& rho2);
// Plain additive variant: sum_lambda q^{|lambda|} sum_{h in H(lambda)} rho(t h).
Series<Rat> gt_series_additive(int t, int order, const HookWeight& rho);

// Product-formula side of a catalog identity. Plain ids live in the rational
// ring; marked ids (y/x/u statistics) in the capped polynomial ring.
bool identity_is_marked(const std::string& id);
Series<Rat> rhs_formula(const std::string& id, const Params& params, int order);
Series<MarkPoly> rhs_formula_marked(const std::string& id, const Params& params, int order,
                                    int vcap);
// Printable coefficient list for either ring (CLI support).
std::vector<std::string> rhs_coefficient_strings(const std::string& id, const Params& params,
                                                 int order, int vcap);
// JSON-shaped coefficients: one rational string per entry for plain ids, an
// array of rational strings (marker degrees 0..vcap) per entry for marked ids.
std::vector<std::vector<std::string>> rhs_coefficient_table(const std::string& id,
                                                            const Params& params, int order,
                                                            int vcap);

CheckReport run_identity(const std::string& id, Params params);
CheckReport run_congruence(const std::string& id, Params params);
CheckReport remark_counterexample(int z, int t);
CheckReport littlewood_property_scan(int n_max, int t_min, int t_max);

const std::vector<std::string>& known_identity_ids();
const std::vector<std::string>& known_congruence_ids();

struct CatalogItem {
    enum class Kind { Identity, Congruence, Remark, Scan };
    Kind kind;
    std::string id;
    Params params;
};

// The default verification catalog; quick mode trims orders and ranges to a
// CI-friendly size.
std::vector<CatalogItem> verification_catalog(bool quick);
CheckReport run_catalog_item(const CatalogItem& item);

// Runs items (possibly concurrently); reports come back in catalog order.
std::vector<CheckReport> run_catalog(const std::vector<CatalogItem>& items, int jobs);

}  // namespace partcomb
