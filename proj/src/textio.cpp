#include "almansi/textio.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace almansi {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            take();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

std::string take_digits(Cursor& c) {
    std::string out;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        out.push_back(c.take());
    return out;
}

Rational parse_rational_token(Cursor& c) {
    std::string num = take_digits(c);
    if (num.empty())
        c.fail("expected number");
    if (!c.done() && c.peek() == '/') {
        c.take();
        std::string den = take_digits(c);
        if (den.empty())
            c.fail("expected denominator");
        if (Rational(den) == 0)
            c.fail("zero denominator");
        return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
}

int parse_exponent(Cursor& c) {
    if (c.done() || c.peek() != '^')
        return 1;
    c.take();
    std::string d = take_digits(c);
    if (d.empty())
        c.fail("expected exponent");
    return std::stoi(d);
}

BladeMask parse_blade_token(Cursor& c, int n) {
    // 'e' already consumed; strictly ascending digit indices.
    std::string digits = take_digits(c);
    if (digits.empty())
        c.fail("expected blade indices after 'e'");
    BladeMask mask = 0;
    int prev = 0;
    for (char d : digits) {
        int idx = d - '0';
        if (idx < 1 || idx > n)
            c.fail("blade index " + std::to_string(idx) + " out of range for n=" +
                   std::to_string(n));
        if (idx <= prev)
            c.fail("blade indices must be strictly ascending");
        prev = idx;
        mask |= BladeMask{1} << (idx - 1);
    }
    return mask;
}

struct RawTerm {
    Rational coef{1};
    Multivector blades;
    ExponentVec exps;
    int slice_power = 0;
    bool has_slice_var = false;
    bool has_space_var = false;

    RawTerm(int n) : blades(n, 1), exps(n + 1, 0) {}
};

RawTerm parse_term(Cursor& c, int n) {
    RawTerm term(n);
    bool any = false;
    while (true) {
        c.skip_ws();
        if (c.done())
            break;
        char p = c.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            term.coef *= parse_rational_token(c);
            any = true;
        } else if (p == 'x') {
            c.take();
            std::string d = take_digits(c);
            if (d.empty())
                c.fail("expected variable index after 'x'");
            int idx = std::stoi(d);
            if (idx > n)
                c.fail("variable index " + d + " out of range for n=" + std::to_string(n));
            term.exps[idx] += parse_exponent(c);
            term.has_space_var = true;
            any = true;
        } else if (p == 'e') {
            c.take();
            BladeMask mask = parse_blade_token(c, n);
            term.blades = term.blades * Multivector::basis_blade(n, mask);
            any = true;
        } else if (p == 'X') {
            c.take();
            term.slice_power += parse_exponent(c);
            term.has_slice_var = true;
            any = true;
        } else {
            break;
        }
    }
    if (!any)
        c.fail("expected term");
    return term;
}

std::vector<std::pair<int, RawTerm>> parse_terms(Cursor& c, int n) {
    std::vector<std::pair<int, RawTerm>> out;
    int sign = 1;
    c.skip_ws();
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        sign = c.take() == '-' ? -1 : 1;
    }
    while (true) {
        out.emplace_back(sign, parse_term(c, n));
        c.skip_ws();
        if (c.done())
            break;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = c.take() == '-' ? -1 : 1;
        } else {
            c.fail(std::string("unexpected character '") + p + "'");
        }
    }
    return out;
}

int blade_max_index(BladeMask m) {
    int top = 0;
    for (int i = 0; i < 30; ++i)
        if (m & (BladeMask{1} << i))
            top = i + 1;
    return top;
}

std::string blade_text(BladeMask m) {
    std::string out = "e";
    for (int i = 0; i < 30; ++i)
        if (m & (BladeMask{1} << i))
            out += std::to_string(i + 1);
    return out;
}

struct PrintAtom {
    ExponentVec exps;
    BladeMask blade;
    Rational coef;
};

// Descending graded lex on the exponent vector, then ascending blade mask.
bool atom_before(const PrintAtom& a, const PrintAtom& b) {
    int da = std::accumulate(a.exps.begin(), a.exps.end(), 0);
    int db = std::accumulate(b.exps.begin(), b.exps.end(), 0);
    if (da != db)
        return da > db;
    if (a.exps != b.exps)
        return a.exps > b.exps;
    return a.blade < b.blade;
}

std::string render_atoms(std::vector<PrintAtom> atoms) {
    if (atoms.empty())
        return "0";
    std::sort(atoms.begin(), atoms.end(), atom_before);
    std::ostringstream os;
    bool first = true;
    for (const auto& atom : atoms) {
        Rational mag = atom.coef;
        bool neg = mag < 0;
        if (neg)
            mag = -mag;
        if (first) {
            if (neg)
                os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> pieces;
        bool has_factor =
            atom.blade != 0 ||
            std::any_of(atom.exps.begin(), atom.exps.end(), [](int d) { return d > 0; });
        if (mag != 1 || !has_factor)
            pieces.push_back(mag.get_str());
        for (size_t i = 0; i < atom.exps.size(); ++i) {
            if (atom.exps[i] == 0)
                continue;
            std::string v = "x" + std::to_string(i);
            if (atom.exps[i] > 1)
                v += "^" + std::to_string(atom.exps[i]);
            pieces.push_back(v);
        }
        if (atom.blade != 0)
            pieces.push_back(blade_text(atom.blade));
        for (size_t i = 0; i < pieces.size(); ++i)
            os << (i ? " " : "") << pieces[i];
    }
    return os.str();
}

void check_text_dim(int n) {
    if (n > 9)
        throw std::invalid_argument(
            "canonical text supports n <= 9; use the structured document format");
}

nlohmann::json multivector_records(const Multivector& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mask, coef] : x.terms()) {
        nlohmann::json blade = nlohmann::json::array();
        for (int i = 0; i < 30; ++i)
            if (mask & (BladeMask{1} << i))
                blade.push_back(i + 1);
        arr.push_back({{"coef", coef.get_str()}, {"blade", blade}});
    }
    return arr;
}

Multivector multivector_from_records(const nlohmann::json& arr, int n) {
    Multivector x(n);
    for (const auto& rec : arr) {
        BladeMask mask = 0;
        int prev = 0;
        for (int idx : rec.at("blade")) {
            if (idx < 1 || idx > n || idx <= prev)
                throw std::invalid_argument("invalid blade index list in document");
            prev = idx;
            mask |= BladeMask{1} << (idx - 1);
        }
        x.add_term(mask, parse_rational(rec.at("coef").get<std::string>()));
    }
    return x;
}

} // namespace

ParsedPolynomial parse_polynomial(const std::string& text, int n) {
    check_text_dim(n);
    Cursor c{text};
    auto terms = parse_terms(c, n);
    bool slice = std::any_of(terms.begin(), terms.end(),
                             [](const auto& t) { return t.second.has_slice_var; });
    bool space = std::any_of(terms.begin(), terms.end(),
                             [](const auto& t) { return t.second.has_space_var; });
    if (slice && space)
        throw ParseError("cannot mix the slice variable X with coordinates x_i", 1, 1);

    if (slice) {
        std::vector<Multivector> coeffs;
        for (const auto& [sign, term] : terms) {
            int k = term.slice_power;
            if (static_cast<int>(coeffs.size()) <= k)
                coeffs.resize(k + 1, Multivector(n));
            coeffs[k] = coeffs[k] + term.blades * (sign > 0 ? term.coef : -term.coef);
        }
        return SlicePolynomial(n, std::move(coeffs));
    }
    MvPolynomial p(n);
    for (const auto& [sign, term] : terms)
        p.add_term(term.exps, term.blades * (sign > 0 ? term.coef : -term.coef));
    return p;
}

MvPolynomial parse_mv_polynomial(const std::string& text, int n) {
    ParsedPolynomial p = parse_polynomial(text, n);
    if (auto* mv = std::get_if<MvPolynomial>(&p))
        return *mv;
    throw ParseError("expected a polynomial in x_0..x_n, got a slice polynomial", 1, 1);
}

SlicePolynomial parse_slice_polynomial(const std::string& text, int n) {
    ParsedPolynomial p = parse_polynomial(text, n);
    if (auto* sp = std::get_if<SlicePolynomial>(&p))
        return *sp;
    // A constant term list has no X; accept degree-0 inputs.
    if (auto* mv = std::get_if<MvPolynomial>(&p)) {
        if (mv->total_degree() <= 0) {
            Multivector a0(n);
            for (const auto& [e, c] : mv->terms())
                a0 = a0 + c;
            return SlicePolynomial::constant(a0);
        }
    }
    throw ParseError("expected a slice polynomial in X", 1, 1);
}

std::string format_polynomial(const MvPolynomial& p) {
    check_text_dim(p.dimension());
    std::vector<PrintAtom> atoms;
    for (const auto& [e, c] : p.terms())
        for (const auto& [mask, coef] : c.terms())
            atoms.push_back({e, mask, coef});
    return render_atoms(std::move(atoms));
}

std::string format_multivector(const Multivector& x) {
    check_text_dim(x.dimension());
    std::vector<PrintAtom> atoms;
    for (const auto& [mask, coef] : x.terms())
        atoms.push_back({ExponentVec(x.dimension() + 1, 0), mask, coef});
    return render_atoms(std::move(atoms));
}

std::string format_slice_polynomial(const SlicePolynomial& f) {
    check_text_dim(f.dimension());
    if (f.degree() < 0)
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        Multivector ck = f.coefficient(k);
        for (const auto& [mask, coef] : ck.terms()) {
            Rational mag = coef;
            bool neg = mag < 0;
            if (neg)
                mag = -mag;
            if (first) {
                if (neg)
                    os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::vector<std::string> pieces;
            if (k >= 1)
                pieces.push_back(k == 1 ? "X" : "X^" + std::to_string(k));
            if (mag != 1 || (k == 0 && mask == 0))
                pieces.push_back(mag.get_str());
            if (mask != 0)
                pieces.push_back(blade_text(mask));
            for (size_t i = 0; i < pieces.size(); ++i)
                os << (i ? " " : "") << pieces[i];
        }
    }
    return first ? "0" : os.str();
}

std::string format_axial_polynomial(const AxialPolynomial& a) {
    // Display form in (a, t); not part of the parse grammar.
    std::vector<std::tuple<int, int, BladeMask, Rational>> atoms;
    for (const auto& [ij, c] : a.terms())
        for (const auto& [mask, coef] : c.terms())
            atoms.emplace_back(ij.first, ij.second, mask, coef);
    if (atoms.empty())
        return "0";
    std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) {
        int dx = std::get<0>(x) + 2 * std::get<1>(x);
        int dy = std::get<0>(y) + 2 * std::get<1>(y);
        if (dx != dy)
            return dx > dy;
        if (std::get<0>(x) != std::get<0>(y))
            return std::get<0>(x) > std::get<0>(y);
        return std::get<2>(x) < std::get<2>(y);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, j, mask, coef] : atoms) {
        Rational mag = coef;
        bool neg = mag < 0;
        if (neg)
            mag = -mag;
        if (first) {
            if (neg)
                os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> pieces;
        if (mag != 1 || (i == 0 && j == 0 && mask == 0))
            pieces.push_back(mag.get_str());
        if (i > 0)
            pieces.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
        if (j > 0)
            pieces.push_back(j == 1 ? "t" : "t^" + std::to_string(j));
        if (mask != 0)
            pieces.push_back(blade_text(mask));
        for (size_t k = 0; k < pieces.size(); ++k)
            os << (k ? " " : "") << pieces[k];
    }
    return os.str();
}

std::string document_from_mv(const MvPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        for (const auto& rec : multivector_records(c)) {
            nlohmann::json term = rec;
            term["exps"] = e;
            terms.push_back(term);
        }
    }
    nlohmann::json doc = {{"n", p.dimension()}, {"kind", "mv"}, {"terms", terms}};
    return doc.dump(2);
}

std::string document_from_slice(const SlicePolynomial& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= f.degree(); ++k)
        coeffs.push_back(multivector_records(f.coefficient(k)));
    nlohmann::json doc = {{"n", f.dimension()}, {"kind", "slice"}, {"coefficients", coeffs}};
    return doc.dump(2);
}

ParsedPolynomial parse_document(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    int n = doc.at("n").get<int>();
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "mv") {
        MvPolynomial p(n);
        for (const auto& term : doc.at("terms")) {
            ExponentVec e = term.at("exps").get<ExponentVec>();
            nlohmann::json one = nlohmann::json::array({term});
            p.add_term(e, multivector_from_records(one, n));
        }
        return p;
    }
    if (kind == "slice") {
        std::vector<Multivector> coeffs;
        for (const auto& recs : doc.at("coefficients"))
            coeffs.push_back(multivector_from_records(recs, n));
        return SlicePolynomial(n, std::move(coeffs));
    }
    throw std::invalid_argument("unknown document kind: " + kind);
}

} // namespace almansi
