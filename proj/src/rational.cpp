#include "solint/rational.hpp"

namespace solint {

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(text));
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    }
}

std::string Rat::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rat pochhammer(const Rat& a, const Rat& b, unsigned k) {
    Rat r(1);
    for (unsigned j = 0; j < k; ++j) r *= a + Rat(long(j)) * b;
    return r;
}

Rat factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rat(r);
}

}  // namespace solint
