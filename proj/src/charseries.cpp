#include "symchar/charseries.hpp"

#include <algorithm>
#include <sstream>

namespace symchar {

CharSeries::CharSeries(int sym_cap, int t_cap) : sym_cap_(sym_cap), t_cap_(t_cap) {
    if (sym_cap < 0 || t_cap < 0)
        throw Error("CharSeries: caps must be nonnegative");
    coeffs_.assign(t_cap_ + 1, SymFn(sym_cap_));
}

CharSeries CharSeries::one(int sym_cap, int t_cap) {
    CharSeries s(sym_cap, t_cap);
    s.coeffs_[0] = SymFn::one(sym_cap);
    return s;
}

CharSeries CharSeries::monomial(const SymFn& f, int k, int t_cap) {
    CharSeries s(f.cap(), t_cap);
    if (k < 0)
        throw Error("CharSeries::monomial: negative t-power");
    if (k <= t_cap)
        s.coeffs_[k] = f;
    return s;
}

CharSeries CharSeries::scalar_series(const std::vector<Rational>& coeffs) {
    CharSeries s(0, static_cast<int>(coeffs.size()) - 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        s.coeffs_[j] = SymFn::constant(coeffs[j], 0);
    return s;
}

const SymFn& CharSeries::at(int j) const {
    if (j < 0 || j > t_cap_)
        throw Error("CharSeries::at: t-degree " + std::to_string(j) + " out of range");
    return coeffs_[j];
}

void CharSeries::set(int j, SymFn f) {
    if (j < 0 || j > t_cap_)
        throw Error("CharSeries::set: t-degree out of range");
    coeffs_[j] = f.truncated(sym_cap_);
}

void CharSeries::add_at(int j, const SymFn& f) {
    if (j < 0 || j > t_cap_)
        throw Error("CharSeries::add_at: t-degree out of range");
    coeffs_[j] += f.truncated(sym_cap_);
}

bool CharSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const SymFn& f) { return f.is_zero(); });
}

CharSeries CharSeries::truncated(int sym_cap, int t_cap) const {
    CharSeries out(std::min(sym_cap, sym_cap_), std::min(t_cap, t_cap_));
    for (int j = 0; j <= out.t_cap_; ++j)
        out.coeffs_[j] = coeffs_[j].truncated(out.sym_cap_);
    return out;
}

CharSeries& CharSeries::operator+=(const CharSeries& other) {
    if (other.sym_cap_ < sym_cap_ || other.t_cap_ < t_cap_)
        *this = truncated(other.sym_cap_, other.t_cap_);
    for (int j = 0; j <= t_cap_; ++j)
        coeffs_[j] += other.coeffs_[j].truncated(sym_cap_);
    return *this;
}

CharSeries CharSeries::operator-() const {
    CharSeries out(sym_cap_, t_cap_);
    for (int j = 0; j <= t_cap_; ++j)
        out.coeffs_[j] = -coeffs_[j];
    return out;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
    CharSeries out(std::min(a.sym_cap_, b.sym_cap_), std::min(a.t_cap_, b.t_cap_));
    for (int i = 0; i <= std::min(a.t_cap_, out.t_cap_); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= out.t_cap_ && j <= b.t_cap_; ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            out.coeffs_[i + j] += a.coeffs_[i].truncated(out.sym_cap_) *
                                  b.coeffs_[j].truncated(out.sym_cap_);
        }
    }
    return out;
}

CharSeries operator*(const CharSeries& a, const Rational& c) {
    CharSeries out(a.sym_cap_, a.t_cap_);
    for (int j = 0; j <= a.t_cap_; ++j)
        out.coeffs_[j] = a.coeffs_[j] * c;
    return out;
}

bool CharSeries::operator==(const CharSeries& other) const {
    if (sym_cap_ != other.sym_cap_ || t_cap_ != other.t_cap_)
        return false;
    return coeffs_ == other.coeffs_;
}

CharSeries CharSeries::shifted_by_t_power(int k) const {
    if (k < 0)
        throw Error("shifted_by_t_power: negative shift");
    CharSeries out(sym_cap_, t_cap_);
    for (int j = 0; j + k <= t_cap_; ++j)
        out.coeffs_[j + k] = coeffs_[j];
    return out;
}

CharSeries CharSeries::substitute_neg_t() const {
    CharSeries out(sym_cap_, t_cap_);
    for (int j = 0; j <= t_cap_; ++j)
        out.coeffs_[j] = (j % 2 == 0) ? coeffs_[j] : -coeffs_[j];
    return out;
}

CharSeries CharSeries::geometric_factor() const {
    CharSeries out(sym_cap_, t_cap_);
    for (int j = 0; j <= t_cap_; ++j)
        for (int k = j; k <= t_cap_; k += 2)
            out.coeffs_[k] += coeffs_[j];
    return out;
}

std::string CharSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= t_cap_; ++j) {
        if (coeffs_[j].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "t^" << j << "*(" << coeffs_[j].to_string() << ")";
    }
    return first ? "0" : os.str();
}

}  // namespace symchar
