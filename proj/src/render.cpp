#include "terracini/render.hpp"

#include <algorithm>
#include <sstream>

namespace terracini {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    if (name == "csv") return Format::csv;
    throw UsageError("unknown format '" + name + "'");
}

const char* format_name(Format f) {
    switch (f) {
        case Format::text: return "text";
        case Format::json: return "json";
        case Format::latex: return "latex";
        case Format::csv: return "csv";
    }
    return "?";
}

namespace {

std::string latex_coeff(const Rational& a) {
    if (a.is_integer()) return a.numerator().get_str();
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_monomial(const Exponents& e) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < sym_count; ++i) {
        if (e[i] == 0) continue;
        if (any) os << " ";
        std::string nm = sym_names[i];
        if (nm == "t1") nm = "t_1";
        if (nm == "t2") nm = "t_2";
        os << nm;
        if (e[i] > 1) os << "^{" << e[i] << "}";
        any = true;
    }
    return any ? os.str() : "";
}

} // namespace

std::string poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono = latex_monomial(it->first);
        if (mono.empty()) {
            os << latex_coeff(a);
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << latex_coeff(a) << " " << mono;
        }
    }
    return os.str();
}

nlohmann::ordered_json poly_terms_json(const Poly& p, const std::vector<Sym>& vars) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::array();
        for (Sym v : vars) exps.push_back(it->first[static_cast<int>(v)]);
        // Exponents outside the declared variable list must be zero.
        for (int i = 0; i < sym_count; ++i) {
            Sym s = static_cast<Sym>(i);
            if (it->first[i] != 0 &&
                std::find(vars.begin(), vars.end(), s) == vars.end())
                throw std::invalid_argument("poly_terms_json: symbol outside variable list");
        }
        terms.push_back(nlohmann::ordered_json::array({exps, it->second.str()}));
    }
    return terms;
}

Poly poly_from_terms_json(const nlohmann::json& terms, const std::vector<Sym>& vars) {
    Poly p;
    for (const auto& t : terms) {
        const auto& exps = t.at(0);
        if (exps.size() != vars.size())
            throw std::invalid_argument("poly_from_terms_json: exponent arity mismatch");
        Exponents e{0, 0, 0, 0};
        for (size_t i = 0; i < vars.size(); ++i)
            e[static_cast<int>(vars[i])] = exps.at(i).get<int>();
        p += Poly::term(Rational::from_string(t.at(1).get<std::string>()), e);
    }
    return p;
}

} // namespace terracini
