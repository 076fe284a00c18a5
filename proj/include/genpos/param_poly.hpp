#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace genpos {

// A polynomial in the generic-transformation parameters with integer
// coefficients (reduced modulo p when p > 0).  Used as the coefficient
// domain of the fraction-free elimination behind the generic initial
// ideal.
class ParamPoly {
   public:
    ParamPoly() = default;
    ParamPoly(int nparams, std::int64_t p) : nparams_(nparams), p_(p) {}

    static ParamPoly constant(int nparams, std::int64_t p, const mpz_class& c);
    static ParamPoly parameter(int nparams, std::int64_t p, int idx);  // 0-based

    int nparams() const { return nparams_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    int num_terms() const { return static_cast<int>(t_.size()); }
    const std::map<std::vector<int>, mpz_class>& terms() const { return t_; }

    void add(const std::vector<int>& e, const mpz_class& c);
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator-() const;

    // Content/sign normalization: over the integers divide out the gcd of
    // the coefficients and make the first one positive; over GF(p) make
    // the first coefficient 1.
    ParamPoly normalized() const;

    bool operator==(const ParamPoly& o) const { return t_ == o.t_; }

    // Exact quotient a / b, or nullopt when b does not divide a.
    static std::optional<ParamPoly> exact_div(const ParamPoly& a, const ParamPoly& b);

    std::string str(const std::vector<std::string>& names = {}) const;

   private:
    void reduce(mpz_class& c) const;

    int nparams_ = 0;
    std::int64_t p_ = 0;
    std::map<std::vector<int>, mpz_class> t_;
};

}  // namespace genpos
