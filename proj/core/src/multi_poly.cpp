#include "loopkit/multi_poly.hpp"

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {
const TauPoly kZeroPoly;
}

MultiPoly MultiPoly::constant(int arity, TauPoly value) {
    MultiPoly p(arity);
    p.add_term(std::vector<int>(arity, 0), value);
    return p;
}

void MultiPoly::add_term(std::vector<int> exponents, const TauPoly& coeff) {
    if (static_cast<int>(exponents.size()) != arity_)
        throw ValidationError("exponent vector arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const TauPoly& MultiPoly::coefficient_of(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? kZeroPoly : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.arity_ != arity_) throw ValidationError("arity mismatch in sum");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& caps) {
    if (a.arity() != b.arity()) throw ValidationError("arity mismatch in product");
    if (static_cast<int>(caps.size()) != a.arity())
        throw ValidationError("caps arity mismatch");
    MultiPoly out(a.arity());
    std::vector<int> e(a.arity());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            bool keep = true;
            for (int l = 0; l < a.arity(); ++l) {
                e[l] = ea[l] + eb[l];
                if (e[l] > caps[l]) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.add_term(e, ca * cb);
        }
    }
    return out;
}

}  // namespace loopkit
