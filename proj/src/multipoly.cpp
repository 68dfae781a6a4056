#include "weylzeta/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "weylzeta/errors.hpp"

namespace weylzeta {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw variable_mismatch_error("MultiPoly supports 1..4 variables");
}

MultiPoly::MultiPoly(int nvars, const Rational& constant) : MultiPoly(nvars) {
    add_term(Expo{}, constant);
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    if (index < 0 || index >= nvars)
        throw variable_mismatch_error("variable index out of range");
    Expo e{};
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

int MultiPoly::degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int j = 0; j < nvars_; ++j) d += e[j];
        deg = std::max(deg, d);
    }
    return deg;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_)
        throw variable_mismatch_error("mixed variable counts in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_)
        throw variable_mismatch_error("mixed variable counts in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw variable_mismatch_error("mixed variable counts in *");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Expo e{};
            for (int j = 0; j < a.nvars_; ++j) e[j] = static_cast<uint16_t>(ea[j] + eb[j]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero())
        return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw variable_mismatch_error("evaluation point has wrong arity");
    // cached powers per variable
    std::array<std::vector<Rational>, kMaxVars> pows;
    for (int j = 0; j < nvars_; ++j) pows[j].push_back(Rational(1));
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j) {
            while (pows[j].size() <= e[j]) pows[j].push_back(pows[j].back() * point[j]);
            if (e[j] != 0)
                t *= pows[j][e[j]];
        }
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& forms) const {
    if (static_cast<int>(forms.size()) != nvars_)
        throw variable_mismatch_error("compose needs one form per variable");
    const int target = forms[0].nvars();
    for (const auto& f : forms)
        if (f.nvars() != target)
            throw variable_mismatch_error("compose forms must share a variable space");

    // Horner in the last active variable, recursing over the leading block.
    struct Rec {
        const std::vector<MultiPoly>& forms;
        int target;
        MultiPoly run(const std::map<Expo, Rational>& terms, int nv) {
            if (terms.empty())
                return MultiPoly(target);
            if (nv == 0) {
                MultiPoly c(target);
                c.add_term(Expo{}, terms.begin()->second);
                return c;
            }
            const int v = nv - 1;
            // split by exponent of variable v
            std::map<int, std::map<Expo, Rational>> layers;
            for (const auto& [e, c] : terms) {
                Expo rest = e;
                rest[v] = 0;
                layers[e[v]][rest] = c;
            }
            const int maxdeg = layers.rbegin()->first;
            MultiPoly acc(target);
            for (int k = maxdeg; k >= 0; --k) {
                if (k != maxdeg)
                    acc = acc * forms[v];
                auto it = layers.find(k);
                if (it != layers.end())
                    acc += run(it->second, v);
            }
            return acc;
        }
        using Expo = MultiPoly::Expo;
    } rec{forms, target};
    return rec.run(terms_, nvars_);
}

Rational MultiPoly::coeff(int k) const {
    Expo e{};
    e[0] = static_cast<uint16_t>(k);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::antiderivative() const {
    if (nvars_ != 1)
        throw variable_mismatch_error("antiderivative is univariate-only");
    MultiPoly r(1);
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        e2[0] = static_cast<uint16_t>(e[0] + 1);
        r.terms_.emplace(e2, c / Rational(e[0] + 1));
    }
    return r;
}

Rational MultiPoly::integral01() const {
    if (nvars_ != 1)
        throw variable_mismatch_error("integral01 is univariate-only");
    Rational total(0);
    for (const auto& [e, c] : terms_) total += c / Rational(e[0] + 1);
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0)
                continue;
            os << "*" << (j < static_cast<int>(names.size()) ? names[j] : "x" + std::to_string(j));
            if (e[j] > 1)
                os << "^" << e[j];
        }
    }
    return os.str();
}

Rational simplex_monomial_integral(const MultiPoly::Expo& e, int dim) {
    unsigned long total = dim;
    mpz_class num(1);
    for (int j = 0; j < dim; ++j) {
        num *= factorial(e[j]);
        total += e[j];
    }
    return Rational(num, factorial(total));
}

Rational integrate_standard_simplex(const MultiPoly& p) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) total += c * simplex_monomial_integral(e, p.nvars());
    return total;
}

} // namespace weylzeta
