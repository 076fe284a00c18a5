#include "genpos/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace genpos {

namespace {

struct Lexer {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col(), msg); }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return s.substr(start, pos - start);
    }
};

int var_index(Lexer& lx, const std::vector<std::string>& vars) {
    int col = lx.col();
    std::string n = lx.name();
    auto it = std::find(vars.begin(), vars.end(), n);
    if (it == vars.end()) throw ParseError(lx.line, col, "unknown variable '" + n + "'");
    return static_cast<int>(it - vars.begin()) + 1;
}

// factor := integer [ '/' integer ] | variable [ '^' integer ]
// term   := [sign] factor { '*' factor }
// poly   := term { ('+'|'-') term }
Polynomial parse_poly_impl(Lexer& lx, FieldSpec field, const std::vector<std::string>& vars) {
    int n = static_cast<int>(vars.size());
    Polynomial result(field, n);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+'))
            sign = 1;
        else if (!first)
            lx.fail("expected '+' or '-'");
        first = false;

        mpq_class coeff(sign);
        Term t(n);
        bool any = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = lx.integer();
                if (lx.accept('/')) {
                    int col = lx.col();
                    mpz_class den = lx.integer();
                    if (den == 0) throw ParseError(lx.line, col, "zero denominator");
                    coeff *= mpq_class(num, den);
                } else {
                    coeff *= num;
                }
                coeff.canonicalize();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                int v = var_index(lx, vars);
                int e = 1;
                if (lx.accept('^')) e = static_cast<int>(lx.integer().get_si());
                t = t.times_var(v, e);
            } else {
                lx.fail("expected a coefficient or variable");
            }
            any = true;
            if (!lx.accept('*')) break;
        }
        if (!any) lx.fail("empty term");
        result.add_monomial(t, Scalar::from_mpq(field, coeff));
    }
    return result;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Polynomial parse_polynomial(FieldSpec field, const std::vector<std::string>& vars,
                            const std::string& text, int line) {
    Lexer lx{text, line};
    if (lx.eof()) throw ParseError(line, 1, "empty polynomial");
    return parse_poly_impl(lx, field, vars);
}

Term parse_term(int nvars, const std::vector<std::string>& vars, const std::string& text) {
    FieldSpec qq;
    Polynomial p = parse_polynomial(qq, vars, text);
    if (p.num_terms() != 1 || !p.leading_coefficient().is_one())
        throw ParseError(0, 1, "expected a single monic term");
    (void)nvars;
    return p.leading_term();
}

IdealFile parse_ideal_file(const std::string& text) {
    IdealFile out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_field = false, have_vars = false, have_ideal = false;
    std::vector<std::pair<int, std::string>> gen_chunks;  // (line, text)
    bool in_ideal = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : strip(line.substr(0, colon));
        bool is_key = colon != std::string::npos && !key.empty() &&
                      std::all_of(key.begin(), key.end(), [](char c) {
                          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                                 c == '-';
                      });
        if (!is_key) {
            if (in_ideal) {
                gen_chunks.push_back({lineno, line});
                continue;
            }
            throw ParseError(lineno, 1, "expected 'key: value'");
        }
        std::string value = strip(line.substr(colon + 1));
        in_ideal = false;
        if (key == "field") {
            have_field = true;
            if (value == "QQ") {
                out.field = FieldSpec{0};
            } else if (value.rfind("GF(", 0) == 0 && value.back() == ')') {
                std::string inner = value.substr(3, value.size() - 4);
                try {
                    out.field.p = std::stoll(inner);
                } catch (...) {
                    throw ParseError(lineno, 1, "bad GF modulus '" + inner + "'");
                }
                if (out.field.p < 2 || out.field.p >= (1LL << 31) || !is_prime(out.field.p))
                    throw ParseError(lineno, 1, "GF modulus must be a prime below 2^31");
            } else {
                throw ParseError(lineno, 1, "field must be QQ or GF(<prime>)");
            }
        } else if (key == "vars") {
            have_vars = true;
            std::istringstream vs(value);
            std::string v;
            while (vs >> v) out.vars.push_back(v);
            if (out.vars.empty()) throw ParseError(lineno, 1, "no variables given");
        } else if (key == "I") {
            have_ideal = true;
            in_ideal = true;
            if (!value.empty()) gen_chunks.push_back({lineno, value});
        } else {
            out.metadata[key] = value;
        }
    }
    if (!have_field) throw ParseError(lineno, 1, "missing 'field:' line");
    if (!have_vars) throw ParseError(lineno, 1, "missing 'vars:' line");
    if (!have_ideal) throw ParseError(lineno, 1, "missing 'I:' line");

    // Re-split the generator text on commas, keeping line numbers.
    std::vector<Polynomial> gens;
    std::string pending;
    int pending_line = 0;
    auto flush = [&]() {
        std::string g = strip(pending);
        pending.clear();
        if (g.empty()) return;
        Polynomial f = parse_polynomial(out.field, out.vars, g, pending_line);
        if (!f.is_homogeneous())
            throw ParseError(pending_line, 1, "generator '" + g + "' is not homogeneous");
        gens.push_back(f);
    };
    for (const auto& [ln, chunk] : gen_chunks) {
        size_t start = 0;
        for (;;) {
            size_t comma = chunk.find(',', start);
            if (pending.empty()) pending_line = ln;
            if (comma == std::string::npos) {
                pending += " " + chunk.substr(start);
                break;
            }
            pending += " " + chunk.substr(start, comma - start);
            flush();
            start = comma + 1;
        }
    }
    flush();
    if (gens.empty()) throw ParseError(pending_line, 1, "empty generator list");
    out.ideal = PolynomialIdeal(out.field, static_cast<int>(out.vars.size()), std::move(gens));
    return out;
}

std::string term_str(const Term& t, const std::vector<std::string>& vars) {
    return t.str(vars);
}

}  // namespace genpos
