#include "syt/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "syt/detail/perm.hpp"
#include "syt/errors.hpp"

namespace syt {

bool TermOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

LaurentPoly LaurentPoly::constant(std::size_t vars, Int value) {
    return monomial(vars, std::vector<int>(vars, 0), std::move(value));
}

LaurentPoly LaurentPoly::monomial(std::size_t vars, std::vector<int> exponents, Int coeff) {
    if (exponents.size() != vars)
        throw DimensionMismatch("monomial exponent arity != variable count");
    LaurentPoly p(vars);
    if (coeff != 0) p.terms_.emplace(std::move(exponents), std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::vandermonde(std::size_t r) {
    LaurentPoly p(r);
    std::vector<long> arrangement(StaircaseVector::staircase(r).entries());
    std::sort(arrangement.begin(), arrangement.end());
    do {
        std::vector<long> probe = arrangement;
        int sign = detail::sort_descending_sign(probe);
        std::vector<int> exps(arrangement.begin(), arrangement.end());
        p.terms_.emplace(std::move(exps), Int(sign));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return p;
}

Int LaurentPoly::coefficient(std::span<const int> m) const {
    if (m.size() != vars_)
        throw DimensionMismatch("exponent vector arity != variable count");
    auto it = terms_.find(std::vector<int>(m.begin(), m.end()));
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const std::vector<int>& exponents, const Int& coeff) {
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw DimensionMismatch("adding polynomials of different arity");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw DimensionMismatch("subtracting polynomials of different arity");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw DimensionMismatch("multiplying polynomials of different arity");
    LaurentPoly out(vars_);
    std::vector<int> e(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
}

LaurentPoly LaurentPoly::shifted(std::span<const int> offset) const {
    if (offset.size() != vars_) throw DimensionMismatch("shift offset arity != variable count");
    LaurentPoly out(vars_);
    std::vector<int> e(vars_);
    for (const auto& [ea, c] : terms_) {
        for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + offset[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string numer, denom;
        int denom_factors = 0;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (e[i] == 0) continue;
            std::string var = "x" + std::to_string(i + 1);
            int a = e[i] > 0 ? e[i] : -e[i];
            std::string factor = a == 1 ? var : var + "^" + std::to_string(a);
            if (e[i] > 0) {
                if (!numer.empty()) numer += "*";
                numer += factor;
            } else {
                if (!denom.empty()) denom += "*";
                denom += factor;
                ++denom_factors;
            }
        }
        Int mag = abs(c);
        std::string body;
        if (numer.empty())
            body = to_decimal(mag);
        else if (mag == 1)
            body = numer;
        else
            body = to_decimal(mag) + "*" + numer;
        if (!denom.empty())
            body += "/" + (denom_factors > 1 ? "(" + denom + ")" : denom);
        out += body;
    }
    return out;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({{"exponents", e}, {"coefficient", to_decimal(c)}});
    return arr;
}

LaurentPoly genfun(long n, std::size_t r) {
    LaurentPoly acc = LaurentPoly::vandermonde(r);

    LaurentPoly step(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        step = step + LaurentPoly::monomial(r, std::move(e));
    }
    // repeated multiplication keeps intermediate supports small and makes
    // every partial product the generating function of one more step
    for (long k = 0; k < n; ++k) acc = acc * step;

    std::vector<int> down(r);
    for (std::size_t i = 0; i < r; ++i) down[i] = -static_cast<int>(r - 1 - i);
    return acc.shifted(down);
}

Int count_via_genfun(const Partition& shape, std::size_t r) {
    if (shape.height() > r)
        throw HeightExceedsR("shape of height " + std::to_string(shape.height()) +
                             " does not fit in " + std::to_string(r) + " rows");
    std::vector<int> m(r);
    for (std::size_t i = 0; i < r; ++i) m[i] = static_cast<int>(shape.part(i));
    return genfun(shape.size(), r).coefficient(m);
}

} // namespace syt
