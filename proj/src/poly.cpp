#include "cliquepoly/poly.hpp"

#include <ostream>

#include "cliquepoly/checked.hpp"
#include "cliquepoly/errors.hpp"

namespace cliquepoly {

Polynomial::Polynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(Coefficient c, int degree) {
    if (degree < 0) throw DomainError("negative degree");
    std::vector<Coefficient> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial::Coefficient Polynomial::coeff(int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked::add(coeffs_[k], other.coeffs_[k]);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] = checked::sub(coeffs_[k], other.coeffs_[k]);
    normalize();
    return *this;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Coefficient c = coeffs_[k];
        if (c == 0) continue;
        // Magnitude as unsigned so INT64_MIN renders correctly.
        const auto mag = c < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (k == 0 || mag != 1) out += std::to_string(mag);
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r += q;
    return r;
}

Polynomial subtract(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    r -= q;
    return r;
}

Polynomial negate(const Polynomial& p) { return Polynomial{} - p; }

Polynomial scale_shift(const Polynomial& p, Polynomial::Coefficient c, int shift) {
    if (shift < 0) throw DomainError("negative shift");
    if (p.is_zero() || c == 0) return {};
    std::vector<Polynomial::Coefficient> v(static_cast<std::size_t>(shift) + p.coefficients().size(), 0);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        v[k + static_cast<std::size_t>(shift)] = checked::mul(c, p.coefficients()[k]);
    return Polynomial(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

} // namespace cliquepoly
