#include "genpos/linear_change.hpp"

#include <stdexcept>

namespace genpos {

LinearChange LinearChange::identity(FieldSpec field, int nvars) {
    LinearChange c;
    c.field_ = field;
    c.n_ = nvars;
    c.m_.assign(nvars, std::vector<Scalar>(nvars, Scalar::zero(field)));
    for (int k = 0; k < nvars; ++k) c.m_[k][k] = Scalar::one(field);
    return c;
}

LinearChange LinearChange::elementary(FieldSpec field, int nvars, int j, int i,
                                      const Scalar& a) {
    if (i >= j || i < 1 || j > nvars) throw std::invalid_argument("bad elementary move");
    LinearChange c = identity(field, nvars);
    c.m_[j - 1][i - 1] = a;
    c.moves_.push_back({j, i, a});
    return c;
}

LinearChange LinearChange::from_matrix(FieldSpec field, std::vector<std::vector<Scalar>> m) {
    LinearChange c;
    c.field_ = field;
    c.n_ = static_cast<int>(m.size());
    c.m_ = std::move(m);
    return c;
}

LinearChange LinearChange::compose(const LinearChange& second, const LinearChange& first) {
    // f(M1 x) then substituting x -> M2 x yields f(M1 M2 x).
    int n = first.n_;
    LinearChange c = identity(first.field_, n);
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
            Scalar s = Scalar::zero(first.field_);
            for (int k = 0; k < n; ++k) s += first.m_[r][k] * second.m_[k][col];
            c.m_[r][col] = s;
        }
    c.moves_ = first.moves_;
    c.moves_.insert(c.moves_.end(), second.moves_.begin(), second.moves_.end());
    return c;
}

LinearChange LinearChange::inverse() const {
    // Gauss-Jordan on [M | I].
    int n = n_;
    auto a = m_;
    auto inv = identity(field_, n).m_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular change of coordinates");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col].inverse();
        for (int c = 0; c < n; ++c) {
            a[col][c] *= d;
            inv[col][c] *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return from_matrix(field_, std::move(inv));
}

bool LinearChange::is_identity() const {
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            if (r == c && !m_[r][c].is_one()) return false;
            if (r != c && !m_[r][c].is_zero()) return false;
        }
    return true;
}

Polynomial LinearChange::apply(const Polynomial& f) const {
    // Variable images as linear polynomials, with memoized powers.
    std::vector<Polynomial> image(n_);
    std::vector<std::vector<Polynomial>> powers(n_);
    for (int k = 0; k < n_; ++k) {
        Polynomial lin(field_, n_);
        for (int j = 0; j < n_; ++j)
            lin.add_monomial(Term::variable(n_, j + 1), m_[k][j]);
        image[k] = lin;
        powers[k] = {Polynomial::monomial(field_, Term(n_), Scalar::one(field_)), lin};
    }
    auto power = [&](int k, int e) -> const Polynomial& {
        auto& cache = powers[k];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[k]);
        return cache[e];
    };
    Polynomial r(field_, n_);
    for (const auto& [t, c] : f.terms()) {
        Polynomial prod = Polynomial::monomial(field_, Term(n_), c);
        for (int k = 0; k < n_; ++k)
            if (t.exponents()[k] > 0) prod = prod * power(k, t.exponents()[k]);
        r = r + prod;
    }
    return r;
}

std::vector<Polynomial> LinearChange::apply(const std::vector<Polynomial>& fs) const {
    std::vector<Polynomial> r;
    r.reserve(fs.size());
    for (const auto& f : fs) r.push_back(apply(f));
    return r;
}

}  // namespace genpos
