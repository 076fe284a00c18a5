#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace genpos {

// A power product x1^{e1}...xn^{en}.  Variable indices are 1-based
// throughout the public interface; x1 is the greatest variable under
// the degree-reverse-lexicographic order used everywhere.
class Term {
   public:
    Term() = default;
    explicit Term(int nvars) : e_(nvars, 0) {}
    explicit Term(std::vector<int> e) : e_(std::move(e)) {}

    static Term variable(int nvars, int i, int power = 1) {
        Term t(nvars);
        t.e_[i - 1] = power;
        return t;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[i - 1]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const;

    // Largest index with nonzero exponent; cls(1) = 1 by convention.
    int cls() const;
    bool is_pure_power() const;

    bool divides(const Term& t) const;
    Term operator*(const Term& t) const;
    Term operator/(const Term& t) const;  // exact division, caller checks
    Term lcm(const Term& t) const;
    Term gcd(const Term& t) const;
    bool coprime(const Term& t) const;
    Term times_var(int i, int power = 1) const;
    Term over_var(int i, int power = 1) const;  // divide by x_i^power

    bool operator==(const Term&) const = default;

    std::string str(const std::vector<std::string>& vars = {}) const;

   private:
    std::vector<int> e_;
};

// true iff a ≺ b (degrevlex: higher total degree wins, ties broken by the
// last nonzero entry of a-b being positive for a ≺ b).
bool degrevlex_less(const Term& a, const Term& b);

// Pure reverse lexicographic comparison, no degree step.
bool revlex_less(const Term& a, const Term& b);

struct DegrevlexGreater {
    bool operator()(const Term& a, const Term& b) const { return degrevlex_less(b, a); }
};

struct RevlexGreater {
    bool operator()(const Term& a, const Term& b) const { return revlex_less(b, a); }
};

}  // namespace genpos
