#pragma once

#include "partcomb/rational.hpp"

#include <string>
#include <vector>

namespace partcomb {

// Dense polynomial in one formal marker variable (standing for y, x or u
// depending on the computation) with exact rational coefficients, truncated
// at a fixed degree cap. The cap is part of the value: binary operations
// reject mismatched caps and products drop every term above the cap, so a
// computation never silently changes ring.
class MarkPoly {
public:
    MarkPoly() : c_(1) {}
    explicit MarkPoly(int cap);
    MarkPoly(const Rat& constant, int cap);
    static MarkPoly variable(int cap);  // the marker itself, degree 1
    static MarkPoly monomial(const Rat& coeff, int degree, int cap);

    int cap() const { return int(c_.size()) - 1; }
    const Rat& coeff(int k) const;
    void set_coeff(int k, const Rat& v);
    const Rat& constant_term() const { return c_[0]; }

    bool is_zero() const;
    bool is_constant() const;

    bool operator==(const MarkPoly&) const = default;

    MarkPoly operator-() const;
    MarkPoly& operator+=(const MarkPoly& o);
    MarkPoly& operator-=(const MarkPoly& o);
    MarkPoly& operator*=(const MarkPoly& o);
    MarkPoly& operator*=(const Rat& r);
    friend MarkPoly operator+(MarkPoly a, const MarkPoly& b) { a += b; return a; }
    friend MarkPoly operator-(MarkPoly a, const MarkPoly& b) { a -= b; return a; }
    friend MarkPoly operator*(MarkPoly a, const MarkPoly& b) { a *= b; return a; }
    friend MarkPoly operator*(MarkPoly a, const Rat& r) { a *= r; return a; }

    // Multiplicative inverse modulo v^{cap+1}; requires a nonzero constant term.
    MarkPoly inverse() const;

    // Discard degrees above new_cap (new_cap <= cap).
    MarkPoly truncated(int new_cap) const;

    std::string str(char var = 'v') const;

private:
    std::vector<Rat> c_;  // c_[k] is the coefficient of v^k; size is cap+1
    void check_same_cap(const MarkPoly& o) const;
};

}  // namespace partcomb
