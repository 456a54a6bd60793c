#pragma once

#include "partcomb/markpoly.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partcomb {

// Coefficient-ring plumbing shared by the two rings in use: exact rationals
// and degree-capped marker polynomials. The vcap argument is the marker
// degree cap; the rational ring ignores it.
template <class C>
struct coeff_ring;

template <>
struct coeff_ring<Rat> {
    static constexpr bool is_poly = false;
    static Rat zero(int) { return Rat(0); }
    static Rat one(int) { return Rat(1); }
    static bool is_zero(const Rat& c) { return c == 0; }
    static bool is_one(const Rat& c) { return c == 1; }
    static bool invertible(const Rat& c) { return c != 0; }
    static Rat inverse(const Rat& c) {
        if (c == 0) throw std::domain_error("division by zero coefficient");
        Rat r = make_rat(1);
        r /= c;
        return r;
    }
    static std::string str(const Rat& c, char) { return rat_str(c); }
};

template <>
struct coeff_ring<MarkPoly> {
    static constexpr bool is_poly = true;
    static MarkPoly zero(int cap) { return MarkPoly(cap); }
    static MarkPoly one(int cap) { return MarkPoly(Rat(1), cap); }
    static bool is_zero(const MarkPoly& c) { return c.is_zero(); }
    static bool is_one(const MarkPoly& c) { return c.is_constant() && c.constant_term() == 1; }
    static bool invertible(const MarkPoly& c) { return c.constant_term() != 0; }
    static MarkPoly inverse(const MarkPoly& c) { return c.inverse(); }
    static std::string str(const MarkPoly& c, char var) { return c.str(var); }
};

// Formal power series in q truncated at a fixed order N: terms q^0..q^N are
// retained and every operation truncates back to order N. Equality is
// coefficientwise. Coefficients are exact (Rat or MarkPoly).
template <class C>
class Series {
public:
    explicit Series(int order, int vcap = 0)
        : order_(order), vcap_(vcap), c_(size_t(order) + 1, coeff_ring<C>::zero(vcap)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static Series zero(int order, int vcap = 0) { return Series(order, vcap); }

    static Series one(int order, int vcap = 0) {
        Series s(order, vcap);
        s.c_[0] = coeff_ring<C>::one(vcap);
        return s;
    }

    // c * q^a (vanishes when a > order)
    static Series monomial(const C& c, int a, int order, int vcap = 0) {
        if (a < 0) throw std::invalid_argument("monomial exponent must be >= 0");
        Series s(order, vcap);
        if (a <= order) s.c_[a] = c;
        return s;
    }

    int order() const { return order_; }
    int vcap() const { return vcap_; }

    const C& coeff(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
        return c_[n];
    }
    void set_coeff(int n, C v) {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
        c_[n] = std::move(v);
    }
    void add_to_coeff(int n, const C& v) {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
        c_[n] += v;
    }

    bool operator==(const Series&) const = default;

private:
    int order_;
    int vcap_;
    std::vector<C> c_;
};

namespace detail {
template <class C>
void check_compatible(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    if (a.vcap() != b.vcap()) throw std::invalid_argument("series marker-cap mismatch");
}
}  // namespace detail

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    Series<C> out = a;
    for (int n = 0; n <= a.order(); ++n) out.add_to_coeff(n, b.coeff(n));
    return out;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    Series<C> out(a.order(), a.vcap());
    for (int n = 0; n <= a.order(); ++n) {
        C v = a.coeff(n);
        v -= b.coeff(n);
        out.set_coeff(n, std::move(v));
    }
    return out;
}

template <class C>
Series<C> operator-(const Series<C>& a) {
    Series<C> out(a.order(), a.vcap());
    for (int n = 0; n <= a.order(); ++n) {
        C v = coeff_ring<C>::zero(a.vcap());
        v -= a.coeff(n);
        out.set_coeff(n, std::move(v));
    }
    return out;
}

template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    const int N = a.order();
    Series<C> out(N, a.vcap());
    for (int i = 0; i <= N; ++i) {
        if (coeff_ring<C>::is_zero(a.coeff(i))) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (coeff_ring<C>::is_zero(b.coeff(j))) continue;
            C prod = a.coeff(i);
            prod *= b.coeff(j);
            out.add_to_coeff(i + j, prod);
        }
    }
    return out;
}

template <class C>
Series<C> scale(const Series<C>& a, const C& c) {
    Series<C> out(a.order(), a.vcap());
    for (int n = 0; n <= a.order(); ++n) {
        C v = a.coeff(n);
        v *= c;
        out.set_coeff(n, std::move(v));
    }
    return out;
}

inline Series<MarkPoly> scale_rat(const Series<MarkPoly>& a, const Rat& r) {
    Series<MarkPoly> out(a.order(), a.vcap());
    for (int n = 0; n <= a.order(); ++n) {
        MarkPoly v = a.coeff(n);
        v *= r;
        out.set_coeff(n, std::move(v));
    }
    return out;
}

inline Series<Rat> scale_rat(const Series<Rat>& a, const Rat& r) { return scale(a, r); }

// Multiply by q^a.
template <class C>
Series<C> shift_up(const Series<C>& a, int k) {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    Series<C> out(a.order(), a.vcap());
    for (int n = 0; n + k <= a.order(); ++n) out.set_coeff(n + k, a.coeff(n));
    return out;
}

// Truncated reciprocal: b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1}^{n} a_k b_{n-k}.
template <class C>
Series<C> inverse(const Series<C>& s) {
    if (!coeff_ring<C>::invertible(s.coeff(0)))
        throw std::domain_error("series is not invertible: constant term has no inverse");
    const int N = s.order();
    Series<C> out(N, s.vcap());
    C lead = coeff_ring<C>::inverse(s.coeff(0));
    out.set_coeff(0, lead);
    for (int n = 1; n <= N; ++n) {
        C acc = coeff_ring<C>::zero(s.vcap());
        for (int k = 1; k <= n; ++k) {
            if (coeff_ring<C>::is_zero(s.coeff(k))) continue;
            C prod = s.coeff(k);
            prod *= out.coeff(n - k);
            acc += prod;
        }
        C v = coeff_ring<C>::zero(s.vcap());
        v -= lead;
        v *= acc;
        out.set_coeff(n, std::move(v));
    }
    return out;
}

// log s for s with constant term 1, via (log s)' = s'/s integrated termwise.
template <class C>
Series<C> log_series(const Series<C>& s) {
    if (!coeff_ring<C>::is_one(s.coeff(0)))
        throw std::domain_error("log requires constant term 1");
    const int N = s.order();
    Series<C> deriv(N, s.vcap());
    for (int n = 1; n <= N; ++n) {
        C v = s.coeff(n);
        v *= make_rat(n);
        deriv.set_coeff(n - 1, std::move(v));
    }
    Series<C> ratio = deriv * inverse(s);
    Series<C> out(N, s.vcap());
    for (int n = 1; n <= N; ++n) {
        C v = ratio.coeff(n - 1);
        v *= make_rat(1, n);
        out.set_coeff(n, std::move(v));
    }
    return out;
}

// exp s for s with constant term 0: n E_n = sum_{k=1}^{n} k s_k E_{n-k}.
template <class C>
Series<C> exp_series(const Series<C>& s) {
    if (!coeff_ring<C>::is_zero(s.coeff(0)))
        throw std::domain_error("exp requires constant term 0");
    const int N = s.order();
    Series<C> out(N, s.vcap());
    out.set_coeff(0, coeff_ring<C>::one(s.vcap()));
    for (int n = 1; n <= N; ++n) {
        C acc = coeff_ring<C>::zero(s.vcap());
        for (int k = 1; k <= n; ++k) {
            if (coeff_ring<C>::is_zero(s.coeff(k))) continue;
            C prod = s.coeff(k);
            prod *= make_rat(k);
            prod *= out.coeff(n - k);
            acc += prod;
        }
        acc *= make_rat(1, n);
        out.set_coeff(n, std::move(acc));
    }
    return out;
}

template <class C>
Series<C> pow_int(const Series<C>& s, long k) {
    if (k < 0) return pow_int(inverse(s), -k);
    Series<C> acc = Series<C>::one(s.order(), s.vcap());
    Series<C> base = s;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

// s^w = exp(w log s) for s with constant term 1 and w a ring element
// (rational, or polynomial in the marker). Agrees with pow_int for integer w.
template <class C>
Series<C> pow_exponent(const Series<C>& s, const C& w) {
    return exp_series(scale(log_series(s), w));
}

// q -> q^k substitution into a possibly larger target order.
template <class C>
Series<C> substitute_power(const Series<C>& s, int k, int out_order) {
    if (k < 1) throw std::invalid_argument("substitution power must be >= 1");
    Series<C> out(out_order, s.vcap());
    for (long long n = 0; n <= s.order() && k * n <= out_order; ++n)
        out.set_coeff(int(k * n), s.coeff(int(n)));
    return out;
}

template <class C>
Series<C> substitute_power(const Series<C>& s, int k) {
    return substitute_power(s, k, s.order());
}

// q -> c q^k: coefficient n lands at q^{kn} multiplied by c^n.
template <class C>
Series<C> substitute_scaled(const Series<C>& s, int k, const C& c, int out_order) {
    if (k < 1) throw std::invalid_argument("substitution power must be >= 1");
    Series<C> out(out_order, s.vcap());
    C cpow = coeff_ring<C>::one(s.vcap());
    for (long long n = 0; n <= s.order() && k * n <= out_order; ++n) {
        if (n > 0) cpow *= c;
        C v = s.coeff(int(n));
        v *= cpow;
        out.set_coeff(int(k * n), std::move(v));
    }
    return out;
}

// (c q^a; q^m)_inf = prod_{j>=0} (1 - c q^{a+jm}), truncated: only factors
// with a+jm <= N differ from 1. Multiplication by (1 - c q^s) is done as a
// sparse update.
template <class C>
Series<C> pochhammer_inf(const C& c, int a, int m, int order, int vcap = 0) {
    if (a < 1) throw std::invalid_argument("pochhammer offset must be >= 1");
    if (m < 1) throw std::invalid_argument("pochhammer step must be >= 1");
    Series<C> out = Series<C>::one(order, vcap);
    for (int s = a; s <= order; s += m) {
        for (int n = order; n >= s; --n) {
            C prod = c;
            prod *= out.coeff(n - s);
            C v = out.coeff(n);
            v -= prod;
            out.set_coeff(n, std::move(v));
        }
    }
    return out;
}

// Finite counterpart: prod_{j=0}^{nfactors-1} (1 - c q^{a+jm}).
template <class C>
Series<C> pochhammer_fin(const C& c, int a, int m, int nfactors, int order, int vcap = 0) {
    if (a < 1) throw std::invalid_argument("pochhammer offset must be >= 1");
    if (m < 1) throw std::invalid_argument("pochhammer step must be >= 1");
    Series<C> out = Series<C>::one(order, vcap);
    for (int j = 0; j < nfactors; ++j) {
        long long s = a + (long long)j * m;
        if (s > order) break;
        for (int n = order; n >= s; --n) {
            C prod = c;
            prod *= out.coeff(n - int(s));
            C v = out.coeff(n);
            v -= prod;
            out.set_coeff(n, std::move(v));
        }
    }
    return out;
}

inline Series<MarkPoly> promote(const Series<Rat>& s, int vcap) {
    Series<MarkPoly> out(s.order(), vcap);
    for (int n = 0; n <= s.order(); ++n) out.set_coeff(n, MarkPoly(s.coeff(n), vcap));
    return out;
}

inline Series<MarkPoly> truncate_vcap(const Series<MarkPoly>& s, int new_cap) {
    Series<MarkPoly> out(s.order(), new_cap);
    for (int n = 0; n <= s.order(); ++n) out.set_coeff(n, s.coeff(n).truncated(new_cap));
    return out;
}

template <class C>
std::optional<int> first_difference(const Series<C>& a, const Series<C>& b) {
    detail::check_compatible(a, b);
    for (int n = 0; n <= a.order(); ++n)
        if (!(a.coeff(n) == b.coeff(n))) return n;
    return std::nullopt;
}

// "c0 + c1*q + ... + cN*q^N" with zero terms skipped.
template <class C>
std::string series_str(const Series<C>& s, char qvar = 'q', char mvar = 'v') {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= s.order(); ++n) {
        if (coeff_ring<C>::is_zero(s.coeff(n))) continue;
        std::string cs = coeff_ring<C>::str(s.coeff(n), mvar);
        if (!first) os << " + ";
        first = false;
        bool needs_parens = cs.find_first_of("+- ") != std::string::npos && n > 0;
        if (n == 0) {
            os << cs;
            continue;
        }
        if (cs == "1") {
            os << qvar;
        } else {
            if (needs_parens)
                os << "(" << cs << ")*" << qvar;
            else
                os << cs << "*" << qvar;
        }
        if (n > 1) os << "^" << n;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace partcomb
