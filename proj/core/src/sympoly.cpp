#include "hlkit/sympoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlkit {

void SymPoly::accumulate(const ExponentVector& exps, const TPoly& coef) {
    if (exps.size() != n_)
        throw std::invalid_argument("SymPoly: exponent vector length mismatch");
    if (coef.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TPoly SymPoly::coeff(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? TPoly{} : it->second;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("SymPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
}

void SymPoly::exact_div_all(const TPoly& d) {
    for (auto& [e, c] : terms_) c = c.exact_div(d);
}

bool SymPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
    return true;
}

SymPoly SymPoly::permute_variables(const std::vector<int>& w) const {
    if (w.size() != n_) throw std::invalid_argument("SymPoly: permutation length mismatch");
    SymPoly out(n_);
    for (const auto& [e, c] : terms_) {
        ExponentVector pe(n_);
        for (std::size_t i = 0; i < n_; ++i) pe[w[i] - 1] = e[i];
        out.accumulate(pe, c);
    }
    return out;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream vars;
        bool first_var = true;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) vars << "*";
            first_var = false;
            vars << "x" << (i + 1);
            if (e[i] > 1) vars << "^" << e[i];
        }
        if (first_var) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << vars.str();
        } else {
            os << "(" << c.to_string() << ")*" << vars.str();
        }
    }
    return os.str();
}

std::string SymPoly::to_json_string() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        if (!first_term) os << ",";
        first_term = false;
        os << "{\"exps\":[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << "],\"coeffs\":[";
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            if (i) os << ",";
            os << "\"" << c.coeffs()[i].str() << "\"";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

}  // namespace hlkit
