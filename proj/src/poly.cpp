#include "solint/poly.hpp"

#include <sstream>

namespace solint {

Poly Poly::var(Var v, int e) {
    Monomial m;
    if (v == Var::x) m.ex = e;
    if (v == Var::y) m.ey = e;
    if (v == Var::z) m.ez = e;
    return Poly(m, Rat(1));
}

Poly Poly::delta() {
    Poly d(Monomial{1, 0, 1}, Rat(1));
    d.add(Monomial{0, 2, 0}, Rat(-1));
    return d;
}

void Poly::add(const Monomial& m, const Rat& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add(Monomial{ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c.isZero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(1);
    Poly b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        b = b * b;
        n >>= 1u;
    }
    return r;
}

Poly Poly::differentiate(Var v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(v);
        if (e == 0) continue;
        Monomial d = m;
        if (v == Var::x) d.ex--;
        if (v == Var::y) d.ey--;
        if (v == Var::z) d.ez--;
        r.add(d, c * Rat(e));
    }
    return r;
}

Rat Poly::evalAt(const Rat& x, const Rat& y, const Rat& z) const {
    Rat r(0);
    for (const auto& [m, c] : terms_)
        r += c * solint::pow(x, unsigned(m.ex)) * solint::pow(y, unsigned(m.ey)) *
             solint::pow(z, unsigned(m.ez));
    return r;
}

bool Poly::isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Poly Poly::degreeSlice(int d) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::truncated(int d) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() <= d) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = m.exp(v);
        if (v == Var::x) rest.ex = 0;
        if (v == Var::y) rest.ey = 0;
        if (v == Var::z) rest.ez = 0;
        r += Poly(rest, c) * value.pow(unsigned(e));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool hasVars = m.degree() > 0;
        bool needCoeff = !hasVars || a != Rat(1);
        if (needCoeff) out << a.str();
        bool needStar = needCoeff;
        auto emit = [&](const char* name, int e) {
            if (e == 0) return;
            if (needStar) out << "*";
            out << name;
            if (e > 1) out << "^" << e;
            needStar = true;
        };
        emit("x", m.ex);
        emit("y", m.ey);
        emit("z", m.ez);
    }
    return out.str();
}

}  // namespace solint
