#include "nalg/expr.hpp"

#include <cctype>
#include <sstream>

namespace nalg {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    Flavor flavor;

    explicit Parser(const std::string& t, Flavor f) : text(t), flavor(f) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) {
        throw ParseError(msg, at + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (!peek_is(c)) return false;
        ++pos;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected digits", pos);
        return text.substr(start, pos - start);
    }

    Rational coeff() {
        size_t at = pos;
        std::string num = digits();
        if (eat('/')) num += "/" + digits();
        try {
            return rational_from_string(num);
        } catch (const std::invalid_argument& e) {
            fail(e.what(), at);
        }
    }

    // var | "(" factor factor ")" ; built as a magma tree
    Monomial factor() {
        skip_ws();
        if (pos >= text.size()) fail("expected a variable or '('", pos);
        if (text[pos] == '(') {
            size_t open = pos;
            ++pos;
            Monomial l = factor();
            Monomial r = factor();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                fail("unbalanced parenthesis", open);
            ++pos;
            return Monomial::node(l, r);
        }
        if (text[pos] == 'x') {
            size_t at = pos;
            ++pos;
            long var = 1;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string d = digits();
                if (d.size() > 7) fail("variable index out of range", at);
                var = std::stol(d);
            }
            if (var < 1) fail("variable index must be >= 1", at);
            return Monomial::leaf(Flavor::Magma, static_cast<int>(var));
        }
        fail(std::string("unexpected character '") + text[pos] + "'", pos);
    }

    // [ coeff [ "*" ] ] factor | coeff
    Polynomial term() {
        skip_ws();
        if (at_digit()) {
            Rational c = coeff();
            skip_ws();
            bool explicit_star = eat('*');
            skip_ws();
            if (explicit_star || (pos < text.size() && (text[pos] == 'x' || text[pos] == '('))) {
                Monomial m = canonicalize(factor(), flavor);
                return Polynomial::from_monomial(m, c);
            }
            return Polynomial::scalar(flavor, c);
        }
        Monomial m = canonicalize(factor(), flavor);
        return Polynomial::from_monomial(m);
    }

    Polynomial poly() {
        Polynomial p(flavor);
        skip_ws();
        bool negate = eat('-');
        Polynomial t = term();
        if (negate) t *= Rational(-1);
        p += t;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                p += term();
            } else if (eat('-')) {
                Polynomial u = term();
                u *= Rational(-1);
                p += u;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos < text.size()) fail("trailing input", pos);
        return p;
    }
};

void print_monomial(std::ostream& os, const Monomial& m) {
    if (m.is_unit()) {
        os << "1";
        return;
    }
    if (m.is_leaf()) {
        if (m.leaf_var() == 1)
            os << "x";
        else
            os << "x" << m.leaf_var();
        return;
    }
    if (m.flavor() == Flavor::Associative) {
        // left-normed bracketing re-parses to the same word
        std::vector<int> w = m.letters();
        for (size_t i = 1; i < w.size(); ++i) os << "(";
        print_monomial(os, Monomial::leaf(m.flavor(), w[0]));
        for (size_t i = 1; i < w.size(); ++i) {
            os << " ";
            print_monomial(os, Monomial::leaf(m.flavor(), w[i]));
            os << ")";
        }
        return;
    }
    auto [l, r] = m.split();
    os << "(";
    print_monomial(os, l);
    os << " ";
    print_monomial(os, r);
    os << ")";
}

} // namespace

Polynomial parse_polynomial(const std::string& text, Flavor flavor) {
    Parser p(text, flavor);
    return p.poly();
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    print_monomial(os, m);
    return os.str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_unit()) {
            os << a.get_str();
        } else if (a == 1) {
            print_monomial(os, m);
        } else {
            os << a.get_str() << "*";
            print_monomial(os, m);
        }
        first = false;
    }
    return os.str();
}

json monomial_to_json(const Monomial& m) {
    if (m.is_unit()) return json::array();
    if (m.flavor() == Flavor::Associative) return json(m.letters());
    if (m.is_leaf()) return json(m.leaf_var());
    auto [l, r] = m.split();
    return json::array({monomial_to_json(l), monomial_to_json(r)});
}

Monomial monomial_from_json(const json& j, Flavor flavor) {
    if (flavor == Flavor::Associative) {
        if (!j.is_array()) throw std::invalid_argument("associative monomial must be an array");
        return Monomial::word(flavor, j.get<std::vector<int>>());
    }
    auto tree = [](auto&& self, const json& node) -> Monomial {
        if (node.is_number_integer())
            return Monomial::leaf(Flavor::Magma, node.get<int>());
        if (node.is_array() && node.empty()) return Monomial::unit(Flavor::Magma);
        if (node.is_array() && node.size() == 2)
            return Monomial::node(self(self, node[0]), self(self, node[1]));
        throw std::invalid_argument("malformed monomial json");
    };
    return canonicalize(tree(tree, j), flavor);
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms())
        terms.push_back({{"coeff", c.get_str()}, {"monomial", monomial_to_json(m)}});
    return {{"flavor", to_string(p.flavor())}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    Flavor f = flavor_from_string(j.at("flavor").get<std::string>());
    Polynomial p(f);
    for (auto& t : j.at("terms")) {
        Rational c = rational_from_string(t.at("coeff").get<std::string>());
        p.add_term(monomial_from_json(t.at("monomial"), f), c);
    }
    return p;
}

json expansion_to_json(const TaylorExpansion& e) {
    json coeffs = json::object();
    for (auto& [a, poly] : e.coefficients) {
        std::string key;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(a[i]);
        }
        if (key.empty()) key = "0";
        coeffs[key] = polynomial_to_json(poly);
    }
    return {{"flavor", to_string(e.flavor)},
            {"nvars", e.nvars},
            {"coefficients", coeffs}};
}

json decomposition_to_json(const Decomposition& d) {
    json parts = json::array();
    for (auto it = d.multiplicities.rbegin(); it != d.multiplicities.rend(); ++it)
        parts.push_back({{"partition", it->first}, {"multiplicity", it->second}});
    return {{"weight", d.weight},
            {"multiplicities", parts},
            {"dimension", d.dimension().get_str()}};
}

} // namespace nalg
