#include "partcomb/markpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace partcomb {

MarkPoly::MarkPoly(int cap) : c_(cap + 1) {
    if (cap < 0) throw std::invalid_argument("degree cap must be >= 0");
}

MarkPoly::MarkPoly(const Rat& constant, int cap) : MarkPoly(cap) { c_[0] = constant; }

MarkPoly MarkPoly::variable(int cap) { return monomial(Rat(1), 1, cap); }

MarkPoly MarkPoly::monomial(const Rat& coeff, int degree, int cap) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    MarkPoly p(cap);
    if (degree <= cap) p.c_[degree] = coeff;  // above the cap the monomial truncates to 0
    return p;
}

const Rat& MarkPoly::coeff(int k) const {
    if (k < 0 || k > cap()) throw std::out_of_range("marker degree out of range");
    return c_[k];
}

void MarkPoly::set_coeff(int k, const Rat& v) {
    if (k < 0 || k > cap()) throw std::out_of_range("marker degree out of range");
    c_[k] = v;
}

bool MarkPoly::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool MarkPoly::is_constant() const {
    for (int k = 1; k <= cap(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

void MarkPoly::check_same_cap(const MarkPoly& o) const {
    if (cap() != o.cap()) throw std::invalid_argument("marker degree cap mismatch");
}

MarkPoly MarkPoly::operator-() const {
    MarkPoly r(*this);
    for (Rat& x : r.c_) x = -x;
    return r;
}

MarkPoly& MarkPoly::operator+=(const MarkPoly& o) {
    check_same_cap(o);
    for (int k = 0; k <= cap(); ++k) c_[k] += o.c_[k];
    return *this;
}

MarkPoly& MarkPoly::operator-=(const MarkPoly& o) {
    check_same_cap(o);
    for (int k = 0; k <= cap(); ++k) c_[k] -= o.c_[k];
    return *this;
}

MarkPoly& MarkPoly::operator*=(const MarkPoly& o) {
    check_same_cap(o);
    std::vector<Rat> out(cap() + 1);
    for (int i = 0; i <= cap(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= cap(); ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    return *this;
}

MarkPoly& MarkPoly::operator*=(const Rat& r) {
    for (Rat& x : c_) x *= r;
    return *this;
}

MarkPoly MarkPoly::inverse() const {
    if (c_[0] == 0) throw std::domain_error("marker polynomial has no inverse: zero constant term");
    MarkPoly out(cap());
    Rat lead = make_rat(1);
    lead /= c_[0];
    out.c_[0] = lead;
    // b_k = -(1/a_0) * sum_{j=1}^{k} a_j b_{k-j}
    for (int k = 1; k <= cap(); ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
        out.c_[k] = -lead * acc;
    }
    return out;
}

MarkPoly MarkPoly::truncated(int new_cap) const {
    if (new_cap < 0 || new_cap > cap()) throw std::invalid_argument("bad truncation cap");
    MarkPoly out(new_cap);
    for (int k = 0; k <= new_cap; ++k) out.c_[k] = c_[k];
    return out;
}

std::string MarkPoly::str(char var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= cap(); ++k) {
        if (c_[k] == 0) continue;
        Rat a = c_[k];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0 || a != 1) os << rat_str(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace partcomb
