// Sparse multivariate polynomials in the fixed variables x, y, z over Rat.
//
// Terms are stored keyed by exponent triple in graded-lexicographic order
// (degree first, then x > y > z), highest term first, which is also the
// canonical display order. Zero coefficients are never stored.
#pragma once

#include "solint/rational.hpp"

#include <map>
#include <string>
#include <tuple>

namespace solint {

enum class Var : int { x = 0, y = 1, z = 2 };

struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    int degree() const { return ex + ey + ez; }
    int exp(Var v) const { return v == Var::x ? ex : (v == Var::y ? ey : ez); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez;
    }
    // Plain tuple order, for use as a map key; display order is MonoOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tie(a.ex, a.ey, a.ez) < std::tie(b.ex, b.ey, b.ez);
    }
};

// Graded lex with x > y > z, descending; map iteration = display order.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.ex != b.ex) return a.ex > b.ex;
        if (a.ey != b.ey) return a.ey > b.ey;
        return a.ez > b.ez;
    }
};

class Poly {
public:
    using Terms = std::map<Monomial, Rat, MonoOrder>;

    Poly() = default;
    explicit Poly(const Rat& c) { add(Monomial{}, c); }
    Poly(const Monomial& m, const Rat& c) { add(m, c); }

    static Poly var(Var v, int e = 1);
    static Poly constant(long c) { return Poly(Rat(c)); }
    // Delta = x z - y^2, the primary invariant; used everywhere.
    static Poly delta();

    bool isZero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rat& c) const;
    Poly pow(unsigned n) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly differentiate(Var v) const;
    Rat evalAt(const Rat& x, const Rat& y, const Rat& z) const;

    bool isHomogeneous() const;
    Poly degreeSlice(int d) const;
    // Terms of degree <= d.
    Poly truncated(int d) const;

    // Substitute a polynomial for one variable (exact composition).
    Poly substitute(Var v, const Poly& value) const;

    std::string str() const;

private:
    Terms terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

}  // namespace solint
