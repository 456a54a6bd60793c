#include "partcomb/harness.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace partcomb {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Int int_pow(long base, int exp) {
    Int out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// HookWeight

HookWeight HookWeight::one() { return HookWeight(); }

HookWeight HookWeight::indicator(int value) {
    if (value < 1) throw std::invalid_argument("indicator value must be >= 1");
    HookWeight w;
    w.kind_ = Kind::Indicator;
    w.value_ = value;
    w.name_ = "indicator:" + std::to_string(value);
    return w;
}

HookWeight HookWeight::power(int beta) {
    if (beta < 0 || beta > 2) throw std::invalid_argument("power weight needs beta in {0,1,2}");
    HookWeight w;
    w.kind_ = Kind::Power;
    w.value_ = beta;
    w.name_ = "power:" + std::to_string(beta);
    return w;
}

HookWeight HookWeight::random_table(int domain_max, std::uint64_t seed) {
    if (domain_max < 1) throw std::invalid_argument("table domain must be >= 1");
    HookWeight w;
    w.kind_ = Kind::Table;
    w.table_.resize(size_t(domain_max) + 1);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int h = 1; h <= domain_max; ++h) w.table_[size_t(h)] = make_rat(num(gen), den(gen));
    w.name_ = "table:" + std::to_string(seed);
    return w;
}

HookWeight HookWeight::parse(const std::string& spec, int domain_max, std::uint64_t seed) {
    if (spec == "one") return one();
    if (spec == "table") return random_table(domain_max, seed);
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const int v = std::stoi(spec.substr(colon + 1));
        if (head == "indicator") return indicator(v);
        if (head == "power") return power(v);
        if (head == "table") return random_table(domain_max, std::uint64_t(v));
    }
    throw std::invalid_argument("unknown hook weight: " + spec +
                                " (expected one, indicator:v, power:b, table)");
}

Rat HookWeight::operator()(long long h) const {
    if (h < 1) throw std::domain_error("hook weights are defined on positive integers");
    switch (kind_) {
        case Kind::One: return Rat(1);
        case Kind::Indicator: return Rat(h == value_ ? 1 : 0);
        case Kind::Power: {
            Rat r(1);
            for (int i = 0; i < value_; ++i) r *= Rat((long)h);
            return r;
        }
        case Kind::Table:
            if (h >= (long long)table_.size())
                throw std::domain_error("hook weight table not defined at " + std::to_string(h));
            return table_[size_t(h)];
    }
    return Rat(0);
}

// ---------------------------------------------------------------------------
// Params / CheckReport

Params& Params::set(const std::string& k, const std::string& v) {
    kv_[k] = v;
    return *this;
}

Params& Params::set(const std::string& k, long long v) {
    kv_[k] = std::to_string(v);
    return *this;
}

bool Params::has(const std::string& k) const { return kv_.count(k) > 0; }

long long Params::get_int(const std::string& k, long long dflt) const {
    auto it = kv_.find(k);
    if (it == kv_.end()) return dflt;
    return std::stoll(it->second);
}

std::string Params::get_str(const std::string& k, const std::string& dflt) const {
    auto it = kv_.find(k);
    return it == kv_.end() ? dflt : it->second;
}

std::string CheckReport::json() const {
    nlohmann::ordered_json j;
    j["identity_id"] = id;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (auto& [k, v] : params.raw()) p[k] = v;
    j["params"] = p;
    j["verdict"] = pass ? "pass" : "fail";
    j["max_order_checked"] = max_order_checked;
    if (witness) {
        nlohmann::ordered_json w;
        w["n"] = witness->n;
        w["lhs"] = witness->lhs;
        w["rhs"] = witness->rhs;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string CheckReport::human() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << "  " << id;
    for (auto& [k, v] : params.raw()) os << " " << k << "=" << v;
    if (!pass && witness)
        os << "  witness: n=" << witness->n << " lhs=" << witness->lhs
           << " rhs=" << witness->rhs;
    if (!note.empty()) os << "  [" << note << "]";
    os << "  (" << elapsed_ms << " ms)";
    return os.str();
}

std::string CheckReport::tsv() const {
    std::ostringstream os;
    os << id << "\t";
    bool first = true;
    for (auto& [k, v] : params.raw()) {
        if (!first) os << ",";
        first = false;
        os << k << "=" << v;
    }
    os << "\t" << (pass ? "pass" : "fail") << "\t" << max_order_checked << "\t";
    if (witness)
        os << witness->n << ":" << witness->lhs << ":" << witness->rhs;
    else
        os << "-";
    os << "\t" << elapsed_ms;
    return os.str();
}

// ---------------------------------------------------------------------------
// Statistic series

namespace {

const std::vector<Partition>& class_members(const ClassSpec& cls, int n,
                                            std::vector<Partition>& scratch) {
    if (cls.kind == ClassSpec::Kind::All) return partitions_of(n);
    scratch = enumerate_class(cls, n);
    return scratch;
}

// Hook values of p divisible by t, with multiplicity.
void hooks_divisible(const Partition& p, int t, std::vector<int>& out,
                     std::vector<int>& conj_scratch) {
    out.clear();
    conjugate_into(p.parts(), conj_scratch);
    visit_hooks(p.parts(), conj_scratch, [&](int h) {
        if (h % t == 0) out.push_back(h);
    });
}

}  // namespace

Series<Rat> class_statistic_series(const ClassSpec& cls, int t, int order,
                                   const HookWeight* rho1, const HookWeight* rho2) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    Series<Rat> out(order);
    std::vector<Partition> scratch;
    std::vector<int> ht, conj;
    for (int n = 0; n <= order; ++n) {
        for (const Partition& p : class_members(cls, n, scratch)) {
            hooks_divisible(p, t, ht, conj);
            Rat term(1);
            if (rho1) {
                Rat prod(1);
                for (int h : ht) prod *= (*rho1)(h);
                term *= prod;
            }
            if (rho2) {
                Rat sum(0);
                for (int h : ht) sum += (*rho2)(h);
                term *= sum;
            }
            out.add_to_coeff(n, term);
        }
    }
    return out;
}

Series<MarkPoly> class_statistic_series_marked(const ClassSpec& cls, int t, int order,
                                               const Marks& marks, int vcap) {
    if (t < 1) throw std::invalid_argument("modulus must be >= 1");
    Series<MarkPoly> out(order, vcap);
    std::vector<Partition> scratch;
    std::vector<int> ht, conj;
    for (int n = 0; n <= order; ++n) {
        for (const Partition& p : class_members(cls, n, scratch)) {
            hooks_divisible(p, t, ht, conj);
            MarkPoly term(Rat(1), vcap);
            if (marks.rho1) {
                Rat prod(1);
                for (int h : ht) prod *= (*marks.rho1)(h);
                term *= prod;
            }
            if (marks.rho2) {
                Rat sum(0);
                for (int h : ht) sum += (*marks.rho2)(h);
                term *= sum;
            }
            if (marks.y_mark) {
                long long nt = 0;
                for (int h : ht)
                    if (h == t) ++nt;
                term *= MarkPoly::monomial(Rat(1), int(nt), vcap);
            }
            if (marks.x_mark) term *= MarkPoly::monomial(Rat(1), int(ht.size()), vcap);
            if (marks.no_weight == Marks::NoWeight::Full) {
                for (int h : ht) {
                    MarkPoly factor(Rat(1), vcap);
                    factor -= MarkPoly::monomial(make_rat(1, (long)h * h), 1, vcap);
                    term *= factor;
                }
            } else if (marks.no_weight == Marks::NoWeight::Halved) {
                std::map<int, int> mult;
                for (int h : ht) ++mult[h];
                for (auto [h, m] : mult) {
                    if (m % 2 != 0)
                        throw std::domain_error(
                            "square-root hook weight needs even multiplicities; value " +
                            std::to_string(h) + " appears " + std::to_string(m) + " times");
                    MarkPoly factor(Rat(1), vcap);
                    factor -= MarkPoly::monomial(make_rat(1, (long)h * h), 1, vcap);
                    for (int i = 0; i < m / 2; ++i) term *= factor;
                }
            }
            out.add_to_coeff(n, term);
        }
    }
    return out;
}

Series<Rat> ft_series(int t, int order, const HookWeight& rho1) {
    Series<Rat> out(order);
    std::vector<int> conj;
    for (int n = 0; n <= order; ++n) {
        for (const Partition& p : partitions_of(n)) {
            conjugate_into(p.parts(), conj);
            Rat prod(1);
            visit_hooks(p.parts(), conj, [&](int h) {
                Rat r = rho1((long long)t * h);
                prod *= r * r;
            });
            out.add_to_coeff(n, prod);
        }
    }
    return out;
}

Series<Rat> gt_series(int t, int order, const HookWeight& rho1, const HookWeight& rho2) {
    Series<Rat> out(order);
    std::vector<int> conj;
    for (int n = 0; n <= order; ++n) {
        for (const Partition& p : partitions_of(n)) {
            conjugate_into(p.parts(), conj);
            Rat prod(1), sum(0);
            visit_hooks(p.parts(), conj, [&](int h) {
                Rat r = rho1((long long)t * h);
                prod *= r * r;
                sum += rho2((long long)t * h);
            });
            out.add_to_coeff(n, Rat(prod * sum));
        }
    }
    return out;
}

Series<Rat> gt_series_additive(int t, int order, const HookWeight& rho) {
    Series<Rat> out(order);
    std::vector<int> conj;
    for (int n = 0; n <= order; ++n) {
        for (const Partition& p : partitions_of(n)) {
            conjugate_into(p.parts(), conj);
            Rat sum(0);
            visit_hooks(p.parts(), conj, [&](int h) { sum += rho((long long)t * h); });
            out.add_to_coeff(n, sum);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product-formula right-hand sides

namespace {

Series<Rat> qq_inf(int a, int m, int N) { return pochhammer_inf(Rat(1), a, m, N); }
Series<Rat> nqq_inf(int a, int m, int N) { return pochhammer_inf(Rat(-1), a, m, N); }

// prod_{i=0}^{f-1} (-q^{2i+z+1}, -q^{2t-2i-z-1}; q^{ 2t})_inf with f = floor((t-z)/2)
Series<Rat> pz_binary_product(int z, int t, int N) {
    const int f = (t - z) / 2;
    Series<Rat> out = Series<Rat>::one(N);
    for (int i = 0; i < f; ++i) {
        out = out * nqq_inf(2 * i + z + 1, 2 * t, N);
        out = out * nqq_inf(2 * t - 2 * i - z - 1, 2 * t, N);
    }
    return out;
}

// Same with the (q^{2t}; q^{2t})_inf factor per i: the z-asymmetric t-core
// generating function.
Series<Rat> pz_core_product(int z, int t, int N) {
    const int f = (t - z) / 2;
    return pz_binary_product(z, t, N) * pow_int(qq_inf(2 * t, 2 * t, N), f);
}

int require_t(const Params& p, int min_t = 2) {
    if (!p.has("t")) throw std::invalid_argument("missing parameter t");
    int t = int(p.get_int("t", 0));
    if (t < min_t) throw std::invalid_argument("t must be >= " + std::to_string(min_t));
    return t;
}

int require_z(const Params& p, int t) {
    if (!p.has("z")) throw std::invalid_argument("missing parameter z");
    int z = int(p.get_int("z", 0));
    if (z < 0 || z > t - 1) throw std::invalid_argument("need 0 <= z <= t-1");
    return z;
}

void require_parity(int t, bool even, const std::string& id) {
    if ((t % 2 == 0) != even)
        throw std::invalid_argument(id + " requires " + (even ? "even" : "odd") + " t");
}

struct IdentityInfo {
    bool marked;
    char marker;  // display variable for marked ids
};

const std::map<std::string, IdentityInfo>& identity_info() {
    static const std::map<std::string, IdentityInfo> info = {
        {"han-ji-addition", {false, 'q'}}, {"gt-closed-form", {false, 'q'}},
        {"sc-addition-even", {false, 'q'}}, {"sc-addition-odd", {false, 'q'}},
        {"sc-mult-even", {false, 'q'}},    {"sc-mult-odd", {false, 'q'}},
        {"sc-gf-y-even", {true, 'y'}},     {"sc-gf-y-odd", {true, 'y'}},
        {"sc-powersum", {false, 'q'}},     {"bgt-gf", {false, 'q'}},
        {"pz-gf", {false, 'q'}},           {"pz-core-gf", {false, 'q'}},
        {"z-addition-mult", {true, 'x'}},  {"z-gf-y", {true, 'y'}},
        {"dd-gf-y", {true, 'y'}},          {"z-NO", {true, 'u'}},
        {"NO", {true, 'u'}}};
    return info;
}

constexpr std::uint64_t kDefaultSeed = 20230917ULL;

HookWeight weight_param(const Params& p, const std::string& key, const std::string& dflt,
                        int domain) {
    return HookWeight::parse(p.get_str(key, dflt), domain,
                             std::uint64_t(p.get_int("seed", (long long)kDefaultSeed)));
}

}  // namespace

bool identity_is_marked(const std::string& id) {
    auto it = identity_info().find(id);
    if (it == identity_info().end()) throw std::invalid_argument("unknown identity: " + id);
    return it->second.marked;
}

Series<Rat> rhs_formula(const std::string& id, const Params& params, int N) {
    if (id == "gt-closed-form") {
        // q / ((1-q) (q;q)_inf)
        Series<Rat> geom = inverse(pochhammer_fin(Rat(1), 1, 1, 1, N));
        return shift_up(geom * inverse(qq_inf(1, 1, N)), 1);
    }
    if (id == "han-ji-addition") {
        const int t = require_t(params);
        HookWeight rho = weight_param(params, "rho", "indicator:" + std::to_string(t), N);
        Series<Rat> g = gt_series_additive(t, N / t, rho);
        return scale_rat(substitute_power(g, t, N) * qq_inf(t, t, N) * inverse(qq_inf(1, 1, N)),
                         make_rat(t));
    }
    if (id == "sc-addition-even" || id == "sc-addition-odd") {
        const int t = require_t(params);
        require_parity(t, id == "sc-addition-even", id);
        HookWeight rho = weight_param(params, "rho", "indicator:" + std::to_string(t), N);
        Series<Rat> g = gt_series_additive(t, N / (2 * t), rho);
        Series<Rat> base = substitute_power(g, 2 * t, N) * qq_inf(2 * t, 2 * t, N) *
                           nqq_inf(1, 2, N);
        if (id == "sc-addition-even") return scale_rat(base, make_rat(t));
        return scale_rat(base * inverse(nqq_inf(t, 2 * t, N)), make_rat(t - 1));
    }
    if (id == "sc-mult-even" || id == "sc-mult-odd") {
        const int t = require_t(params);
        require_parity(t, id == "sc-mult-even", id);
        HookWeight rho = weight_param(params, "rho", "power:1", N);
        const int e = (id == "sc-mult-even") ? t / 2 : (t - 1) / 2;
        Series<Rat> f = ft_series(t, N / (2 * t), rho);
        Series<Rat> out = pow_int(substitute_power(f, 2 * t, N), e) *
                          pow_int(qq_inf(2 * t, 2 * t, N), e) * nqq_inf(1, 2, N);
        if (id == "sc-mult-odd") out = out * inverse(nqq_inf(t, 2 * t, N));
        return out;
    }
    if (id == "sc-powersum") {
        const int t = require_t(params);
        require_parity(t, true, id);
        const int beta = int(params.get_int("beta", 1));
        if (beta < 0 || beta > 2) throw std::invalid_argument("beta must be in {0,1,2}");
        Series<Rat> lambert(N);
        for (int k = 1; 2 * k * t <= N; ++k) {
            Int c = int_pow((long)t * k, beta + 1);
            Rat coeff(c);
            for (int e = 2 * k * t; e <= N; e += 2 * k * t) lambert.add_to_coeff(e, coeff);
        }
        return nqq_inf(1, 2, N) * lambert;
    }
    if (id == "bgt-gf") {
        const int t = require_t(params);
        require_parity(t, false, id);
        return nqq_inf(1, 2, N) * inverse(nqq_inf(t, 2 * t, N));
    }
    if (id == "pz-gf") {
        const int z = int(params.get_int("z", 0));
        const int az = z < 0 ? -z : z;
        return nqq_inf(1 + az, 2, N);
    }
    if (id == "pz-core-gf") {
        const int t = require_t(params);
        const int z = require_z(params, t);
        return pz_core_product(z, t, N);
    }
    throw std::invalid_argument("unknown or non-rational identity: " + id);
}

Series<MarkPoly> rhs_formula_marked(const std::string& id, const Params& params, int N,
                                    int vcap) {
    if (id == "sc-gf-y-even" || id == "sc-gf-y-odd") {
        const int t = require_t(params);
        require_parity(t, id == "sc-gf-y-even", id);
        const int e = (id == "sc-gf-y-even") ? t / 2 : (t - 1) / 2;
        MarkPoly c(Rat(1), vcap);  // 1 - y^2
        c -= MarkPoly::monomial(Rat(1), 2, vcap);
        Series<MarkPoly> out = pow_int(pochhammer_inf(c, 2 * t, 2 * t, N, vcap), e) *
                               promote(nqq_inf(1, 2, N), vcap);
        if (id == "sc-gf-y-odd") out = out * promote(inverse(nqq_inf(t, 2 * t, N)), vcap);
        return out;
    }
    if (id == "z-gf-y") {
        const int t = require_t(params);
        const int z = require_z(params, t);
        const int f = (t - z) / 2;
        MarkPoly c(Rat(1), vcap);
        c -= MarkPoly::monomial(Rat(1), 2, vcap);
        return pow_int(pochhammer_inf(c, 2 * t, 2 * t, N, vcap), f) *
               promote(pz_binary_product(z, t, N), vcap);
    }
    if (id == "dd-gf-y") {
        const int t = require_t(params);
        const int e = (t - 1) / 2;
        MarkPoly c(Rat(1), vcap);
        c -= MarkPoly::monomial(Rat(1), 2, vcap);
        Series<Rat> tail = (t % 2 == 1) ? inverse(nqq_inf(2 * t, 2 * t, N))
                                        : inverse(nqq_inf(t, t, N));
        return pow_int(pochhammer_inf(c, 2 * t, 2 * t, N, vcap), e) *
               promote(Series<Rat>(nqq_inf(2, 2, N) * tail), vcap);
    }
    if (id == "z-NO") {
        const int t = require_t(params);
        const int z = require_z(params, t);
        const int f = (t - z) / 2;
        MarkPoly w = MarkPoly::monomial(make_rat(f, (long)t * t), 1, vcap);  // f u / t^2
        return pow_exponent(promote(qq_inf(2 * t, 2 * t, N), vcap), w) *
               promote(pz_binary_product(z, t, N), vcap);
    }
    if (id == "NO") {
        MarkPoly w = MarkPoly::variable(vcap);  // u - 1
        w -= MarkPoly(Rat(1), vcap);
        return pow_exponent(promote(qq_inf(1, 1, N), vcap), w);
    }
    if (id == "z-addition-mult") {
        const int t = require_t(params);
        const int z = require_z(params, t);
        const int f = (t - z) / 2;
        HookWeight rho1 = weight_param(params, "rho1", "one", N);
        HookWeight rho2 = weight_param(params, "rho2", "indicator:" + std::to_string(t), N);
        const int M = N / (2 * t);
        MarkPoly x2 = MarkPoly::monomial(Rat(1), 2, vcap);
        Series<MarkPoly> fx =
            substitute_scaled(promote(ft_series(t, M, rho1), vcap), 2 * t, x2, N);
        Series<MarkPoly> gx =
            substitute_scaled(promote(gt_series(t, M, rho1, rho2), vcap), 2 * t, x2, N);
        Series<MarkPoly> out =
            pow_int(fx, f - 1) * gx * promote(pz_core_product(z, t, N), vcap);
        return scale_rat(out, make_rat(2 * f));
    }
    throw std::invalid_argument("unknown or non-marked identity: " + id);
}

std::vector<std::string> rhs_coefficient_strings(const std::string& id, const Params& params,
                                                 int order, int vcap) {
    std::vector<std::string> out;
    if (identity_is_marked(id)) {
        char var = identity_info().at(id).marker;
        Series<MarkPoly> s = rhs_formula_marked(id, params, order, vcap);
        for (int n = 0; n <= order; ++n) out.push_back(s.coeff(n).str(var));
    } else {
        Series<Rat> s = rhs_formula(id, params, order);
        for (int n = 0; n <= order; ++n) out.push_back(rat_str(s.coeff(n)));
    }
    return out;
}

std::vector<std::vector<std::string>> rhs_coefficient_table(const std::string& id,
                                                            const Params& params, int order,
                                                            int vcap) {
    std::vector<std::vector<std::string>> out;
    if (identity_is_marked(id)) {
        Series<MarkPoly> s = rhs_formula_marked(id, params, order, vcap);
        for (int n = 0; n <= order; ++n) {
            std::vector<std::string> row;
            for (int k = 0; k <= vcap; ++k) row.push_back(rat_str(s.coeff(n).coeff(k)));
            out.push_back(std::move(row));
        }
    } else {
        Series<Rat> s = rhs_formula(id, params, order);
        for (int n = 0; n <= order; ++n) out.push_back({rat_str(s.coeff(n))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

template <class C>
void finish_series_report(CheckReport& r, const Series<C>& lhs, const Series<C>& rhs,
                          char mvar) {
    r.max_order_checked = lhs.order();
    auto diff = first_difference(lhs, rhs);
    if (diff) {
        r.pass = false;
        r.witness = Witness{*diff, coeff_ring<C>::str(lhs.coeff(*diff), mvar),
                            coeff_ring<C>::str(rhs.coeff(*diff), mvar)};
    } else {
        r.pass = true;
    }
}

int default_order(const std::string& id) {
    if (id == "NO") return 15;
    if (id == "z-NO") return 20;
    return 40;
}

int default_vcap(const std::string& id) {
    if (id == "NO" || id == "z-NO") return 3;
    return 4;
}

}  // namespace

CheckReport run_identity(const std::string& id, Params params) {
    const auto start = Clock::now();
    auto info_it = identity_info().find(id);
    if (info_it == identity_info().end())
        throw std::invalid_argument("unknown identity: " + id);
    const int N = int(params.get_int("order", default_order(id)));
    params.set("order", (long long)N);

    CheckReport r;
    r.id = id;

    if (!info_it->second.marked) {
        Series<Rat> lhs(N);
        if (id == "gt-closed-form") {
            const int t = require_t(params, 1);
            lhs = gt_series_additive(t, N, HookWeight::indicator(t));
        } else if (id == "han-ji-addition") {
            const int t = require_t(params);
            HookWeight rho = weight_param(params, "rho", "indicator:" + std::to_string(t), N);
            params.set("rho", rho.name());
            lhs = class_statistic_series(ClassSpec::all(), t, N, nullptr, &rho);
        } else if (id == "sc-addition-even" || id == "sc-addition-odd") {
            const int t = require_t(params);
            require_parity(t, id == "sc-addition-even", id);
            HookWeight rho = weight_param(params, "rho", "indicator:" + std::to_string(t), N);
            params.set("rho", rho.name());
            ClassSpec cls = (t % 2 == 0) ? ClassSpec::sc() : ClassSpec::bgt(t);
            lhs = class_statistic_series(cls, t, N, nullptr, &rho);
        } else if (id == "sc-mult-even" || id == "sc-mult-odd") {
            const int t = require_t(params);
            require_parity(t, id == "sc-mult-even", id);
            HookWeight rho = weight_param(params, "rho", "power:1", N);
            params.set("rho", rho.name());
            ClassSpec cls = (t % 2 == 0) ? ClassSpec::sc() : ClassSpec::bgt(t);
            lhs = class_statistic_series(cls, t, N, &rho, nullptr);
        } else if (id == "sc-powersum") {
            const int t = require_t(params);
            require_parity(t, true, id);
            const int beta = int(params.get_int("beta", 1));
            params.set("beta", (long long)beta);
            HookWeight rho = HookWeight::power(beta);
            lhs = class_statistic_series(ClassSpec::sc(), t, N, nullptr, &rho);
        } else if (id == "bgt-gf") {
            const int t = require_t(params);
            require_parity(t, false, id);
            lhs = class_statistic_series(ClassSpec::bgt(t), t, N, nullptr, nullptr);
        } else if (id == "pz-gf") {
            const int z = int(params.get_int("z", 0));
            params.set("z", (long long)z);
            lhs = class_statistic_series(ClassSpec::pz(z), 1, N, nullptr, nullptr);
            // Three routes: enumeration, infinite product, Durfee-indexed sum.
            Series<Rat> prod = rhs_formula(id, params, N);
            const int az = z < 0 ? -z : z;
            Series<Rat> dsum(N);
            for (int d = 0; (long long)d * d + (long long)d * az <= N; ++d) {
                Series<Rat> term = inverse(pochhammer_fin(Rat(1), 2, 2, d, N));
                dsum = dsum + shift_up(term, d * d + d * az);
            }
            finish_series_report(r, lhs, prod, 'q');
            if (r.pass) {
                finish_series_report(r, prod, dsum, 'q');
                if (!r.pass) r.note = "product vs d-indexed sum";
            } else {
                r.note = "enumeration vs product";
            }
            r.params = params;
            r.elapsed_ms = ms_since(start);
            return r;
        } else if (id == "pz-core-gf") {
            const int t = require_t(params);
            const int z = require_z(params, t);
            for (const Partition& core : pz_t_cores_up_to(z, t, N))
                lhs.add_to_coeff(core.weight(), Rat(1));
        }
        Series<Rat> rhs = rhs_formula(id, params, N);
        finish_series_report(r, lhs, rhs, 'q');
    } else {
        const int D = int(params.get_int("degree-cap", default_vcap(id)));
        params.set("degree-cap", (long long)D);
        const char mvar = info_it->second.marker;
        Series<MarkPoly> lhs(N, D);
        if (id == "sc-gf-y-even" || id == "sc-gf-y-odd") {
            const int t = require_t(params);
            require_parity(t, id == "sc-gf-y-even", id);
            Marks marks;
            marks.y_mark = true;
            ClassSpec cls = (t % 2 == 0) ? ClassSpec::sc() : ClassSpec::bgt(t);
            lhs = class_statistic_series_marked(cls, t, N, marks, D);
        } else if (id == "z-gf-y" || id == "dd-gf-y") {
            const int t = require_t(params);
            const int z = (id == "dd-gf-y") ? 1 : require_z(params, t);
            Marks marks;
            marks.y_mark = true;
            lhs = class_statistic_series_marked(ClassSpec::bgzt(z, t), t, N, marks, D);
        } else if (id == "z-NO") {
            const int t = require_t(params);
            const int z = require_z(params, t);
            Marks marks;
            marks.no_weight = Marks::NoWeight::Halved;
            lhs = class_statistic_series_marked(ClassSpec::bgzt(z, t), t, N, marks, D);
        } else if (id == "NO") {
            Marks marks;
            marks.no_weight = Marks::NoWeight::Full;
            lhs = class_statistic_series_marked(ClassSpec::all(), 1, N, marks, D);
        } else if (id == "z-addition-mult") {
            const int t = require_t(params);
            const int z = require_z(params, t);
            Marks marks;
            marks.x_mark = true;
            marks.rho1 = weight_param(params, "rho1", "one", N);
            marks.rho2 = weight_param(params, "rho2", "indicator:" + std::to_string(t), N);
            params.set("rho1", marks.rho1->name());
            params.set("rho2", marks.rho2->name());
            lhs = class_statistic_series_marked(ClassSpec::bgzt(z, t), t, N, marks, D);
        }
        Series<MarkPoly> rhs = rhs_formula_marked(id, params, N, D);
        finish_series_report(r, lhs, rhs, mvar);
    }
    r.params = params;
    r.elapsed_ms = ms_since(start);
    return r;
}

// ---------------------------------------------------------------------------
// Congruence checks

namespace {

// One pass over all partitions of every n <= n_max, tabulating the number of
// hooks of each exact length and the number of occurrences of each part.
struct AllSweep {
    std::vector<std::vector<long long>> hooks_eq;  // [n][v]
    std::vector<std::vector<long long>> part_occ;  // [n][v]
};

std::shared_ptr<const AllSweep> all_sweep(int n_max) {
    static std::map<int, std::shared_ptr<const AllSweep>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n_max);
    if (it != cache.end()) return it->second;
    auto sweep = std::make_shared<AllSweep>();
    sweep->hooks_eq.assign(size_t(n_max) + 1, std::vector<long long>(size_t(n_max) + 1, 0));
    sweep->part_occ.assign(size_t(n_max) + 1, std::vector<long long>(size_t(n_max) + 1, 0));
    std::vector<int> conj;
    for (int n = 0; n <= n_max; ++n) {
        auto& hooks_row = sweep->hooks_eq[size_t(n)];
        auto& parts_row = sweep->part_occ[size_t(n)];
        for_each_partition(n, [&](const std::vector<int>& parts) {
            conjugate_into(parts, conj);
            visit_hooks(parts, conj, [&](int h) { ++hooks_row[size_t(h)]; });
            for (int v : parts) ++parts_row[size_t(v)];
        });
    }
    cache.emplace(n_max, sweep);
    return sweep;
}

// Per-weight member counts and exact-hook-length counts for one class.
struct ClassScan {
    std::vector<long long> count;                  // [n]
    std::vector<std::vector<long long>> hooks_eq;  // [n][v]
};

ClassScan scan_class(const ClassSpec& cls, int n_max) {
    ClassScan s;
    s.count.assign(size_t(n_max) + 1, 0);
    s.hooks_eq.assign(size_t(n_max) + 1, std::vector<long long>(size_t(n_max) + 1, 0));
    std::vector<int> conj;
    for (int n = 0; n <= n_max; ++n) {
        for (const Partition& p : enumerate_class(cls, n)) {
            ++s.count[size_t(n)];
            conjugate_into(p.parts(), conj);
            visit_hooks(p.parts(), conj,
                        [&](int h) { ++s.hooks_eq[size_t(n)][size_t(h)]; });
        }
    }
    return s;
}

struct CongruencePoint {
    Int lhs, rhs;
    Int modulus = 1;  // 0 means "must be exactly zero" (degenerate case)
};

CheckReport scan_congruence(const std::string& id, Params params, int n_max,
                            const std::function<CongruencePoint(int)>& point,
                            const std::string& note, Clock::time_point start) {
    CheckReport r;
    r.id = id;
    r.max_order_checked = n_max;
    r.pass = true;
    r.note = note;
    for (int n = 0; n <= n_max; ++n) {
        CongruencePoint pt = point(n);
        bool ok = (pt.lhs == pt.rhs);
        if (ok) {
            if (pt.modulus == 0)
                ok = (pt.lhs == 0);
            else
                ok = (pt.lhs % pt.modulus == 0);
        }
        if (!ok) {
            r.pass = false;
            r.witness = Witness{n, int_str(pt.lhs), int_str(pt.rhs)};
            break;
        }
    }
    r.params = params;
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace

CheckReport run_congruence(const std::string& id, Params params) {
    const auto start = Clock::now();
    const int n_max = int(params.get_int("n_max", 60));
    params.set("n_max", (long long)n_max);

    if (id == "congP" || id == "congP-parts") {
        const int t = require_t(params);
        auto sweep = all_sweep(n_max);
        return scan_congruence(
            id, params, n_max,
            [&, t](int n) {
                CongruencePoint pt;
                pt.lhs = Int((long)sweep->hooks_eq[size_t(n)][size_t(t)]);
                pt.modulus = t;
                if (id == "congP") {
                    Int acc(0);
                    for (int j = 1; n - j * t >= 0; ++j) acc += partition_count(n - j * t);
                    pt.rhs = t * acc;
                } else {
                    pt.rhs = Int(t) * (long)sweep->part_occ[size_t(n)][size_t(t)];
                }
                return pt;
            },
            "", start);
    }
    if (id == "sc-cong-even" || id == "sc-cong-odd") {
        const int t = require_t(params);
        require_parity(t, id == "sc-cong-even", id);
        ClassSpec cls = (t % 2 == 0) ? ClassSpec::sc() : ClassSpec::bgt(t);
        const long factor = (t % 2 == 0) ? t : t - 1;
        ClassScan scan = scan_class(cls, n_max);
        return scan_congruence(
            id, params, n_max,
            [&, t, factor](int n) {
                CongruencePoint pt;
                pt.lhs = Int((long)scan.hooks_eq[size_t(n)][size_t(t)]);
                Int acc(0);
                for (int j = 1; n - 2 * j * t >= 0; ++j)
                    acc += (long)scan.count[size_t(n - 2 * j * t)];
                pt.rhs = Int(factor) * acc;
                pt.modulus = factor;
                return pt;
            },
            cls.str(), start);
    }
    if (id == "bt-star-cong") {
        const int t = require_t(params);
        require_parity(t, true, id);
        ClassScan scan = scan_class(ClassSpec::sc(), n_max);
        return scan_congruence(
            id, params, n_max,
            [&, t](int n) {
                CongruencePoint pt;
                long stat = 0;
                for (int k = 1; k * t <= n; ++k)
                    stat += long(scan.hooks_eq[size_t(n)][size_t(k * t)]);
                pt.lhs = Int(stat);
                Int acc(0);
                for (int k = 1; 2 * k * t <= n; ++k)
                    for (int j = 1; n - 2 * k * t * j >= 0; ++j)
                        acc += Int(k) * (long)scan.count[size_t(n - 2 * k * t * j)];
                pt.rhs = t * acc;
                pt.modulus = t;
                return pt;
            },
            "", start);
    }
    if (id == "z-cong" || id == "dd-cong") {
        const int t = require_t(params);
        const int z = (id == "dd-cong") ? 1 : require_z(params, t);
        if (id == "dd-cong") params.set("z", 1LL);
        const long factor = 2L * ((t - z) / 2);
        ClassScan scan = scan_class(ClassSpec::bgzt(z, t), n_max);
        return scan_congruence(
            id, params, n_max,
            [&, t, factor](int n) {
                CongruencePoint pt;
                pt.lhs = Int((long)scan.hooks_eq[size_t(n)][size_t(t)]);
                Int acc(0);
                for (int j = 1; n - 2 * t * j >= 0; ++j)
                    acc += (long)scan.count[size_t(n - 2 * t * j)];
                pt.rhs = Int(factor) * acc;
                pt.modulus = factor;
                return pt;
            },
            factor == 0 ? "degenerate: class is {empty}, statistic identically zero" : "",
            start);
    }
    throw std::invalid_argument("unknown congruence: " + id);
}

// ---------------------------------------------------------------------------
// Remark counterexamples and the structural scan

CheckReport remark_counterexample(int z, int t) {
    const auto start = Clock::now();
    if (t < 2 || z < 0 || z > t - 1)
        throw std::invalid_argument("need t >= 2 and 0 <= z <= t-1");
    const bool odd_gap = (t - z) % 2 == 1;
    if (!odd_gap && z == 0)
        throw std::invalid_argument("no counterexample case for z = 0 with even t");

    Params params;
    params.set("z", (long long)z).set("t", (long long)t);
    CheckReport r;
    r.id = "remark-counterexample";
    r.params = params;

    // In both cases the counted hook length equals the scanned weight: a hook
    // as long as the whole partition forces the hook shape, which is unique in
    // the class. For t-z odd that weight is t itself; for z > 0 with t-z even
    // it is 2t-z+1 (the witness's principal hook).
    int weight;
    FrobeniusCoords fw;
    if (odd_gap) {
        weight = t;
        const int m = (t - z - 1) / 2;
        fw.arms = {m + z};
        fw.legs = {m};
    } else {
        weight = 2 * t - z + 1;
        fw.arms = {t};
        fw.legs = {t - z};
    }
    const Partition predicted = from_frobenius(fw);

    long long total = 0, at_witness = 0;
    for (const Partition& p : pz_partitions(z, weight)) {
        long long c = count_hooks_equal(p, weight);
        total += c;
        if (p == predicted) at_witness = c;
    }
    const bool witness_outside = !in_bg_zt(predicted, z, t);
    r.max_order_checked = weight;
    r.pass = (total == 1) && (at_witness == 1) && witness_outside;
    if (!r.pass) r.witness = Witness{weight, std::to_string(total), "1"};
    std::ostringstream note;
    note << "weight " << weight << ", witness " << (predicted.str().empty() ? "-" : predicted.str())
         << (witness_outside ? " (outside bgzt)" : " (UNEXPECTEDLY in bgzt)");
    r.note = note.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckReport littlewood_property_scan(int n_max, int t_min, int t_max) {
    const auto start = Clock::now();
    if (t_min < 1 || t_max < t_min) throw std::invalid_argument("bad modulus range");
    Params params;
    params.set("n_max", (long long)n_max);
    params.set("t_min", (long long)t_min);
    params.set("t_max", (long long)t_max);
    CheckReport r;
    r.id = "littlewood-scan";
    r.params = params;
    r.max_order_checked = n_max;
    r.pass = true;

    long long checked = 0, bg_checked = 0;
    for (int n = 0; n <= n_max && r.pass; ++n) {
        for (const Partition& p : partitions_of(n)) {
            for (int t = t_min; t <= t_max; ++t) {
                Decomposition d = decompose(p, t);
                long long qsum = 0;
                HookMultiset scaled;
                for (const Partition& nu : d.quotient) {
                    qsum += nu.weight();
                    HookMultiset hs = hooks(nu, 1);
                    for (auto& [v, m] : hs.counts()) scaled.add(t * v, m);
                }
                bool ok = is_t_core(d.core, t) &&
                          p.weight() == d.core.weight() + (long long)t * qsum &&
                          hooks(p, t) == scaled;
                ++checked;
                if (ok && t >= 2) {
                    for (int z = 0; z < t && ok; ++z) {
                        if (!is_z_asymmetric(p, z) || !in_bg_zt(p, z, t)) continue;
                        ++bg_checked;
                        ok = ok && is_z_asymmetric(d.core, z);
                        for (int rr = z; rr < t && ok; ++rr)
                            ok = d.quotient[size_t(rr)] ==
                                 conjugate(d.quotient[size_t(t + z - rr - 1)]);
                        for (int rr = 0; rr < z && ok; ++rr)
                            ok = d.quotient[size_t(rr)].empty();
                        if (ok && (t + z - 1) % 2 == 0)
                            ok = d.quotient[size_t((t + z - 1) / 2)].empty();
                        if (ok) {
                            long long half = 0;
                            for (int rr = z; rr <= (t + z - 2) / 2; ++rr)
                                half += d.quotient[size_t(rr)].weight();
                            ok = p.weight() == d.core.weight() + 2LL * t * half;
                        }
                    }
                }
                if (!ok) {
                    r.pass = false;
                    r.witness = Witness{n, p.str(), "t=" + std::to_string(t)};
                    break;
                }
            }
            if (!r.pass) break;
        }
    }
    std::ostringstream note;
    note << checked << " decompositions, " << bg_checked << " bgzt members";
    r.note = note.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<std::string>& known_identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (auto& [id, info] : identity_info()) v.push_back(id);
        return v;
    }();
    return ids;
}

const std::vector<std::string>& known_congruence_ids() {
    static const std::vector<std::string> ids = {
        "congP", "congP-parts", "sc-cong-even", "sc-cong-odd",
        "bt-star-cong", "z-cong", "dd-cong"};
    return ids;
}

std::vector<CatalogItem> verification_catalog(bool quick) {
    using K = CatalogItem::Kind;
    std::vector<CatalogItem> items;
    auto ident = [&](const std::string& id, Params p) {
        items.push_back({K::Identity, id, std::move(p)});
    };
    auto cong = [&](const std::string& id, Params p) {
        items.push_back({K::Congruence, id, std::move(p)});
    };

    const int N = quick ? 25 : 40;
    const int n_max = quick ? 40 : 60;
    const int t_hi_cong = quick ? 5 : 10;
    const int t_hi_gf = quick ? 4 : 7;
    const int t_hi_add = quick ? 4 : 7;

    ident("gt-closed-form", Params().set("t", 3LL).set("order", (long long)N));
    for (int t = 2; t <= t_hi_add; ++t) {
        ident("han-ji-addition", Params().set("t", (long long)t).set("order", (long long)N));
        Params mult = Params().set("t", (long long)t).set("order", (long long)N);
        ident(t % 2 == 0 ? "sc-addition-even" : "sc-addition-odd",
              Params().set("t", (long long)t).set("order", (long long)N));
        ident(t % 2 == 0 ? "sc-mult-even" : "sc-mult-odd", mult);
        if (t % 2 == 0)
            for (int beta = 0; beta <= 2; ++beta)
                ident("sc-powersum", Params()
                                         .set("t", (long long)t)
                                         .set("beta", (long long)beta)
                                         .set("order", (long long)N));
        for (int z = 0; z < t; ++z)
            ident("z-addition-mult",
                  Params().set("t", (long long)t).set("z", (long long)z).set("order",
                                                                             (long long)N));
        // One randomized-table instance per modulus.
        ident("han-ji-addition",
              Params().set("t", (long long)t).set("rho", "table").set("order", (long long)N));
    }
    for (int z = -4; z <= 4; ++z)
        ident("pz-gf", Params().set("z", (long long)z).set("order", (long long)N));
    for (int t = 2; t <= t_hi_gf; ++t) {
        for (int z = 0; z < t; ++z) {
            ident("pz-core-gf",
                  Params().set("t", (long long)t).set("z", (long long)z).set("order",
                                                                             (long long)N));
            ident("z-gf-y", Params().set("t", (long long)t).set("z", (long long)z).set(
                                "order", (long long)N));
        }
        ident(t % 2 == 0 ? "sc-gf-y-even" : "sc-gf-y-odd",
              Params().set("t", (long long)t).set("order", (long long)N));
        ident("dd-gf-y", Params().set("t", (long long)t).set("order", (long long)N));
        if (t % 2 == 1) ident("bgt-gf", Params().set("t", (long long)t).set("order", (long long)N));
    }
    ident("NO", Params().set("order", quick ? 12LL : 15LL));
    for (int t = 2; t <= (quick ? 3 : 7); ++t)
        for (int z = 0; z < t; ++z)
            ident("z-NO", Params().set("t", (long long)t).set("z", (long long)z).set(
                              "order", quick ? 14LL : 20LL));

    for (int t = 2; t <= t_hi_cong; ++t) {
        cong("congP", Params().set("t", (long long)t).set("n_max", (long long)n_max));
        cong("congP-parts", Params().set("t", (long long)t).set("n_max", (long long)n_max));
        cong(t % 2 == 0 ? "sc-cong-even" : "sc-cong-odd",
             Params().set("t", (long long)t).set("n_max", (long long)n_max));
        if (t % 2 == 0)
            cong("bt-star-cong", Params().set("t", (long long)t).set("n_max", (long long)n_max));
        for (int z = 0; z < t; ++z)
            cong("z-cong", Params().set("t", (long long)t).set("z", (long long)z).set(
                               "n_max", (long long)n_max));
        cong("dd-cong", Params().set("t", (long long)t).set("n_max", (long long)n_max));
    }

    for (int t = 2; t <= (quick ? 5 : 9); ++t)
        for (int z = 0; z < t; ++z) {
            const bool odd_gap = (t - z) % 2 == 1;
            if (odd_gap || z > 0)
                items.push_back({K::Remark, "remark-counterexample",
                                 Params().set("z", (long long)z).set("t", (long long)t)});
        }

    items.push_back({K::Scan, "littlewood-scan",
                     Params()
                         .set("n_max", quick ? 16LL : 24LL)
                         .set("t_min", 2LL)
                         .set("t_max", quick ? 5LL : 7LL)});
    return items;
}

CheckReport run_catalog_item(const CatalogItem& item) {
    switch (item.kind) {
        case CatalogItem::Kind::Identity:
            return run_identity(item.id, item.params);
        case CatalogItem::Kind::Congruence:
            return run_congruence(item.id, item.params);
        case CatalogItem::Kind::Remark:
            return remark_counterexample(int(item.params.get_int("z", 0)),
                                         int(item.params.get_int("t", 2)));
        case CatalogItem::Kind::Scan:
            return littlewood_property_scan(int(item.params.get_int("n_max", 24)),
                                            int(item.params.get_int("t_min", 2)),
                                            int(item.params.get_int("t_max", 7)));
    }
    throw std::logic_error("unreachable");
}

std::vector<CheckReport> run_catalog(const std::vector<CatalogItem>& items, int jobs) {
    std::vector<CheckReport> reports(items.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < items.size(); ++i) reports[i] = run_catalog_item(items[i]);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            reports[i] = run_catalog_item(items[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace partcomb
