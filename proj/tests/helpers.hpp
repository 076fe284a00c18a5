#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "genpos/io.hpp"

namespace testutil {

inline std::vector<std::string> var_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

inline genpos::Term t(int nvars, const std::string& s) {
    return genpos::parse_term(nvars, var_names(nvars), s);
}

inline genpos::Polynomial poly(genpos::FieldSpec field, int nvars, const std::string& s) {
    return genpos::parse_polynomial(field, var_names(nvars), s);
}

inline genpos::MonomialIdeal mono(int nvars, const std::vector<std::string>& gens) {
    std::vector<genpos::Term> ts;
    for (const auto& g : gens) ts.push_back(t(nvars, g));
    return genpos::MonomialIdeal(nvars, ts);
}

inline genpos::PolynomialIdeal ideal(genpos::FieldSpec field, int nvars,
                                     const std::vector<std::string>& gens) {
    std::vector<genpos::Polynomial> ps;
    for (const auto& g : gens) ps.push_back(poly(field, nvars, g));
    return genpos::PolynomialIdeal(field, nvars, ps);
}

inline genpos::IdealFile load_fixture(const std::string& name) {
    std::string path = std::string(FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return genpos::parse_ideal_file(ss.str());
}

}  // namespace testutil
