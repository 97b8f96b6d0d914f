// solint - exact symbolic engine for completely integrable solenoidal
// triple-zero vector fields.
//
// Exit codes: 0 success, 1 parse error, 2 precondition failure,
// 3 internal inconsistency.

#include "solint/liealg.hpp"
#include "solint/parse.hpp"
#include "solint/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace solint;

struct CommonOpts {
    int maxGrade = 6;
    std::string format = "text";
    std::string input = "-";
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool withInput = true) {
    cmd->add_option("--max-grade", o.maxGrade, "Truncation grade for all computations")
        ->default_val(6)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "Output format")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    if (withInput)
        cmd->add_option("--input", o.input, "Read the field from this file ('-' for stdin)")
            ->default_val("-");
}

std::string readAll(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VField readField(const CommonOpts& o) { return parseField(readAll(o.input)); }

void emit(const CommonOpts& o, const json& result, const std::string& text) {
    if (o.format == "json") std::cout << result.dump(2) << "\n";
    else std::cout << text;
}

int runProtected(const std::string& format, const std::function<void()>& body) {
    auto report = [&](const char* kind, const std::string& msg, int code,
                      std::optional<std::size_t> pos = std::nullopt) {
        if (format == "json") {
            json err{{"error", {{"kind", kind}, {"message", msg}}}};
            if (pos) err["error"]["position"] = *pos;
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error (" << kind << "): " << msg << "\n";
        }
        return code;
    };
    try {
        body();
        return 0;
    } catch (const ParseError& e) {
        return report("parse", e.what(), 1, e.position);
    } catch (const std::invalid_argument& e) {
        return report("precondition", e.what(), 2);
    } catch (const std::out_of_range& e) {
        return report("precondition", e.what(), 2);
    } catch (const std::logic_error& e) {
        return report("internal", e.what(), 3);
    }
}

std::string expansionText(const Expansion& e) {
    std::ostringstream out;
    out << e.str() << "\n";
    return out.str();
}

GenIndex parseBIndex(const std::string& fam, int l, int i, int k) {
    if (fam != "B") throw std::invalid_argument("bracket arguments must be B-family indices");
    GenIndex g{Family::B, l, i, k};
    validateIndex(g);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for integrable solenoidal triple-zero vector fields"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* cVerify = app.add_subcommand("verify", "Membership test: div(v) = 0 and v(Delta) = 0");
    addCommon(cVerify, opts);

    auto* cDecompose = app.add_subcommand("decompose", "Expand a field over the A/B/C generator basis");
    addCommon(cDecompose, opts);

    auto* cBracket = app.add_subcommand("bracket", "Lie bracket of two B-generators in basis coordinates");
    std::vector<std::string> bracketArgs;
    cBracket->add_option("index", bracketArgs, "two indices: B l1 i1 k1 B l2 i2 k2")
        ->expected(8);
    addCommon(cBracket, opts, false);

    auto* cPoisson = app.add_subcommand("poisson", "Poisson bracket of two polynomial expressions");
    std::vector<std::string> poissonArgs;
    cPoisson->add_option("expr", poissonArgs, "two polynomial expressions")->expected(2);
    addCommon(cPoisson, opts, false);

    auto* cNormal = app.add_subcommand("normal-form", "First-level (= infinite-level) normal form");
    addCommon(cNormal, opts);

    auto* cClebsch = app.add_subcommand("clebsch", "Clebsch potential pair (Delta, S(v))");
    addCommon(cClebsch, opts);

    auto* cVp = app.add_subcommand("vector-potential", "Both vector potential gauges and their difference");
    addCommon(cVp, opts);

    auto* cHam = app.add_subcommand("hamiltonian",
                                    "Normalize, rescale and reduce to the planar Hamiltonian form");
    addCommon(cHam, opts);

    CLI11_PARSE(app, argc, argv);

    return runProtected(opts.format, [&] {
        if (cVerify->parsed()) {
            auto mem = membershipB(readField(opts));
            json j{{"member", mem.member}};
            std::ostringstream text;
            if (mem) {
                text << "member of B: yes\n";
            } else {
                j["failedCondition"] = mem.failedCondition;
                j["witness"] = mem.witness.str();
                text << "member of B: no\nwitness " << mem.failedCondition << " = "
                     << mem.witness.str() << "\n";
            }
            emit(opts, j, text.str());
        } else if (cDecompose->parsed()) {
            Expansion e = decompose(readField(opts));
            emit(opts, toJson(e), expansionText(e));
        } else if (cBracket->parsed()) {
            auto num = [&](const std::string& s) {
                try {
                    return std::stoi(s);
                } catch (...) {
                    throw std::invalid_argument("bracket: expected an integer index, got '" + s + "'");
                }
            };
            GenIndex a = parseBIndex(bracketArgs[0], num(bracketArgs[1]), num(bracketArgs[2]),
                                     num(bracketArgs[3]));
            GenIndex b = parseBIndex(bracketArgs[4], num(bracketArgs[5]), num(bracketArgs[6]),
                                     num(bracketArgs[7]));
            Expansion e = bracketInBasis(a, b);
            emit(opts, toJson(e), expansionText(e));
        } else if (cPoisson->parsed()) {
            Poly r = poissonBracket(parsePoly(poissonArgs[0]), parsePoly(poissonArgs[1]));
            emit(opts, json(r.str()), r.str() + "\n");
        } else if (cNormal->parsed()) {
            NFResult nf = normalize(readField(opts), opts.maxGrade);
            std::ostringstream text;
            if (nf.p) text << "p = " << *nf.p << "\n";
            text << "linearizable through grade " << nf.maxGrade << ": "
                 << (nf.linearizable ? "yes" : "no") << "\n";
            for (const auto& [ik, b] : nf.coeffs)
                text << "b[" << ik.first << "," << ik.second << "] = " << b.str() << "\n";
            text << "I = " << nf.invariantI.str() << "\n";
            emit(opts, toJson(nf), text.str());
        } else if (cClebsch->parsed()) {
            PotentialPair pp = clebschForm(readField(opts));
            emit(opts, toJson(pp),
                 "primary = " + pp.primary.str() + "\nsecondary = " + pp.secondary.str() + "\n");
        } else if (cVp->parsed()) {
            VField v = readField(opts);
            VectorPotential d = vectorPotentialDelta(v);
            VectorPotential r = vectorPotentialRadial(v);
            Poly f = gaugeDifference(r, d);
            json j{{"deltaForm", toJson(d.field)},
                   {"radialForm", toJson(r.field)},
                   {"gaugeDifference", f.str()}};
            emit(opts, j,
                 "deltaForm = " + d.field.str() + "\nradialForm = " + r.field.str() +
                     "\ngaugeDifference = " + f.str() + "\n");
        } else if (cHam->parsed()) {
            NFResult nf = normalize(readField(opts), opts.maxGrade);
            if (!nf.linearizable && nf.p && nf.coeffs.at({*nf.p, 0}) != Rat(1))
                nf = rescaleLeading(nf);
            PlanarHamiltonian h = hamiltonianReduce(nf);
            emit(opts, toJson(h),
                 "H(Z, Y) = " + h.hamiltonian.str() + "   (x stands for the conserved X = c)\n" +
                     "reduced field = " + h.reducedField.str() + "\n");
        }
    });
}
