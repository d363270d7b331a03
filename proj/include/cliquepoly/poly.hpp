#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cliquepoly {

/// Dense univariate polynomial with signed 64-bit coefficients, index = degree.
///
/// Always normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing. All arithmetic is overflow-checked and throws
/// OverflowError instead of wrapping.
class Polynomial {
public:
    using Coefficient = std::int64_t;

    Polynomial() = default;
    Polynomial(std::initializer_list<Coefficient> coeffs);
    explicit Polynomial(std::vector<Coefficient> coeffs);

    /// c * x^degree
    static Polynomial monomial(Coefficient c, int degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^k; 0 outside the stored range.
    Coefficient coeff(int k) const noexcept;
    std::span<const Coefficient> coefficients() const noexcept { return coeffs_; }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    /// Ascending-degree rendering: "1+3x+3x^2+2x^3", "x^3", "1-2x^3", "0".
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Coefficient> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);

/// c * x^shift * p
Polynomial scale_shift(const Polynomial& p, Polynomial::Coefficient c, int shift);

inline bool eq(const Polynomial& p, const Polynomial& q) { return p == q; }

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator-(const Polynomial& p) { return negate(p); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace cliquepoly
