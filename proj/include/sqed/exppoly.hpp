#ifndef SQED_EXPPOLY_HPP
#define SQED_EXPPOLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqed/format.hpp"

namespace sqed {

/**
 * Exponential polynomial sum_i c_i t^{k_i} exp(lambda_i t).
 *
 * This is the function class produced by residue sums of rational Laplace
 * transforms: a pole of order k + 1 at lambda contributes t^k exp(lambda t).
 * It is closed under addition, scaling, multiplication by exp(mu t),
 * differentiation and integration, which is all the perturbative recursion
 * needs.
 *
 * Canonical form: no two terms share (power, rate); rates closer than
 * merge_tolerance * max(1, |rate|) are the same rate; terms smaller than
 * prune_tolerance * max|c| are dropped; terms are sorted by
 * (Re rate, Im rate, power).
 */
template <typename Real>
class ExpPoly {
public:
    using Scalar = std::complex<Real>;

    struct Term {
        Scalar coeff;
        int power = 0;
        Scalar rate;
    };

    static constexpr Real merge_tolerance = Real(1e-12);
    static constexpr Real prune_tolerance = Real(1e-15);

    ExpPoly() = default;

    explicit ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

    static ExpPoly constant(Scalar c) { return ExpPoly({{c, 0, Scalar(0)}}); }
    static ExpPoly monomial(Scalar c, int power, Scalar rate) { return ExpPoly({{c, power, rate}}); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int max_power() const {
        int k = 0;
        for (const auto& t : terms_)
            k = std::max(k, t.power);
        return k;
    }

    Scalar operator()(Real t) const {
        Scalar sum(0);
        for (const auto& term : terms_) {
            Scalar v = term.coeff * std::exp(term.rate * t);
            for (int i = 0; i < term.power; ++i)
                v *= t;
            sum += v;
        }
        return sum;
    }

    ExpPoly& operator+=(const ExpPoly& other) {
        terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
        canonicalize();
        return *this;
    }

    ExpPoly& operator*=(Scalar c) {
        for (auto& term : terms_)
            term.coeff *= c;
        canonicalize();
        return *this;
    }

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(const ExpPoly& a) { return a * Scalar(-1); }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a += -b; }
    friend ExpPoly operator*(ExpPoly a, Scalar c) { return a *= c; }
    friend ExpPoly operator*(Scalar c, ExpPoly a) { return a *= c; }

    /// Canonical equality: same powers, rates within merge tolerance,
    /// bitwise-equal coefficients.
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const Term& x = a.terms_[i];
            const Term& y = b.terms_[i];
            if (x.power != y.power || x.coeff != y.coeff || !same_rate(x.rate, y.rate))
                return false;
        }
        return true;
    }

    static bool same_rate(Scalar a, Scalar b) {
        return std::abs(a - b) < merge_tolerance * std::max(Real(1), std::abs(a));
    }

private:
    void canonicalize() {
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (const Term& term : terms_) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) {
                return m.power == term.power && same_rate(m.rate, term.rate);
            });
            if (it == merged.end())
                merged.push_back(term);
            else
                it->coeff += term.coeff;
        }
        Real largest = 0;
        for (const Term& m : merged)
            largest = std::max(largest, std::abs(m.coeff));
        std::erase_if(merged, [&](const Term& m) {
            return m.coeff == Scalar(0) || std::abs(m.coeff) < prune_tolerance * largest;
        });
        std::sort(merged.begin(), merged.end(), [](const Term& x, const Term& y) {
            if (x.rate.real() != y.rate.real())
                return x.rate.real() < y.rate.real();
            if (x.rate.imag() != y.rate.imag())
                return x.rate.imag() < y.rate.imag();
            return x.power < y.power;
        });
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

using ExpPolyd = ExpPoly<double>;

template <typename Real>
ExpPoly<Real> add(const ExpPoly<Real>& a, const ExpPoly<Real>& b) {
    return a + b;
}

template <typename Real>
std::complex<Real> eval(const ExpPoly<Real>& a, Real t) {
    return a(t);
}

/// a(t) * exp(mu t): shifts every rate by mu.
template <typename Real>
ExpPoly<Real> mul_exp(const ExpPoly<Real>& a, std::complex<Real> mu) {
    auto terms = a.terms();
    for (auto& term : terms)
        term.rate += mu;
    return ExpPoly<Real>(std::move(terms));
}

template <typename Real>
ExpPoly<Real> derivative(const ExpPoly<Real>& a) {
    using Term = typename ExpPoly<Real>::Term;
    std::vector<Term> out;
    for (const auto& term : a.terms()) {
        out.push_back({term.coeff * term.rate, term.power, term.rate});
        if (term.power > 0)
            out.push_back({term.coeff * Real(term.power), term.power - 1, term.rate});
    }
    return ExpPoly<Real>(std::move(out));
}

/**
 * Antiderivative F with F(t0) = 0.
 *
 * For lambda != 0,
 *   int t^k e^{lambda t} dt = e^{lambda t} sum_{m=0}^{k} (-1)^{k-m} k! / (m! lambda^{k-m+1}) t^m,
 * and lambda = 0 terms integrate to t^{k+1} / (k+1). Rates within the merge
 * tolerance of zero take the polynomial branch.
 */
template <typename Real>
ExpPoly<Real> integrate_from(const ExpPoly<Real>& a, Real t0) {
    using Scalar = std::complex<Real>;
    using Term = typename ExpPoly<Real>::Term;
    std::vector<Term> out;
    for (const auto& term : a.terms()) {
        if (std::abs(term.rate) < ExpPoly<Real>::merge_tolerance) {
            out.push_back({term.coeff / Real(term.power + 1), term.power + 1, Scalar(0)});
            continue;
        }
        const Scalar inv = Scalar(1) / term.rate;
        // m = k down to 0: coefficient k!/(m!) * (-1)^{k-m} / lambda^{k-m+1}
        Scalar c = term.coeff * inv;
        for (int m = term.power; m >= 0; --m) {
            out.push_back({c, m, term.rate});
            c *= -Real(m) * inv;
        }
    }
    ExpPoly<Real> f(std::move(out));
    return f - ExpPoly<Real>::constant(f(t0));
}

/// Coefficient-wise comparison with relative tolerance on the coefficients.
template <typename Real>
bool approx_equal(const ExpPoly<Real>& a, const ExpPoly<Real>& b, Real rel_tol) {
    if (a.size() != b.size())
        return false;
    Real scale = 0;
    for (const auto& t : a.terms())
        scale = std::max(scale, std::abs(t.coeff));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.terms()[i];
        const auto& y = b.terms()[i];
        if (x.power != y.power || !ExpPoly<Real>::same_rate(x.rate, y.rate) ||
            std::abs(x.coeff - y.coeff) > rel_tol * scale)
            return false;
    }
    return true;
}

/// Debug rows: c_re,c_im,k,lambda_re,lambda_im, one term per line.
template <typename Real>
void write_rows(std::ostream& os, const ExpPoly<Real>& a) {
    for (const auto& t : a.terms())
        os << format_double(double(t.coeff.real())) << ',' << format_double(double(t.coeff.imag())) << ','
           << t.power << ',' << format_double(double(t.rate.real())) << ','
           << format_double(double(t.rate.imag())) << '\n';
}

template <typename Real>
ExpPoly<Real> read_rows(std::istream& is) {
    using Term = typename ExpPoly<Real>::Term;
    std::vector<Term> terms;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');)
            fields.push_back(f);
        if (fields.size() != 5)
            throw std::invalid_argument("read_rows: expected 5 fields in '" + line + "'");
        const int power = std::stoi(fields[2]);
        if (power < 0)
            throw std::invalid_argument("read_rows: negative power");
        terms.push_back({{Real(parse_double(fields[0])), Real(parse_double(fields[1]))},
                         power,
                         {Real(parse_double(fields[3])), Real(parse_double(fields[4]))}});
    }
    return ExpPoly<Real>(std::move(terms));
}

}  // namespace sqed

#endif  // SQED_EXPPOLY_HPP
