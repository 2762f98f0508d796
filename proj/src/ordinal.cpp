#include "ttt/ordinal.hpp"

#include <stdexcept>

namespace ttt {

Ordinal Ordinal::nat(uint64_t n) {
    Ordinal r;
    if (n > 0) r.terms_.push_back({Ordinal(), n});
    return r;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& e, uint64_t c) {
    if (c == 0) throw std::invalid_argument("ordinal: zero coefficient");
    if (e.is_zero()) return nat(c);
    Ordinal r;
    r.terms_.push_back({e, c});
    return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff == 0) throw std::invalid_argument("ordinal: zero coefficient");
        if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
            throw std::invalid_argument("ordinal: exponents must strictly decrease");
    }
    Ordinal r;
    r.terms_ = std::move(terms);
    return r;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_limit() const {
    return !terms_.empty() && !terms_.back().exponent.is_zero();
}

Ordinal Ordinal::successor() const {
    Ordinal r = *this;
    if (!r.terms_.empty() && r.terms_.back().exponent.is_zero())
        r.terms_.back().coeff += 1;
    else
        r.terms_.push_back({Ordinal(), 1});
    return r;
}

Ordinal Ordinal::predecessor() const {
    if (!is_successor()) throw std::invalid_argument("ordinal: predecessor of a non-successor");
    Ordinal r = *this;
    if (r.terms_.back().coeff > 1)
        r.terms_.back().coeff -= 1;
    else
        r.terms_.pop_back();
    return r;
}

Ordinal Ordinal::fundamental(uint64_t i) const {
    if (!is_limit()) throw std::invalid_argument("ordinal: fundamental sequence of a non-limit");
    Ordinal head = *this;  // everything before one unit of the last term
    Term last = head.terms_.back();
    if (last.coeff > 1)
        head.terms_.back().coeff -= 1;
    else
        head.terms_.pop_back();

    const Ordinal& e = last.exponent;  // nonzero since *this is a limit
    Ordinal step;
    if (e.is_limit())
        step = omega_pow(e.fundamental(i));
    else
        step = omega_pow(e.predecessor(), i + 1);
    // Appending keeps CNF valid: step's exponent is strictly below e,
    // and head's trailing exponent is >= e.
    head.terms_.push_back(step.terms_[0]);
    return head;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& o) const {
    // Lexicographic on the (exponent, coefficient) term lists; a longer
    // list with an equal prefix is greater (its tail adds a positive part).
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        auto c = terms_[i].exponent <=> o.terms_[i].exponent;
        if (c != std::strong_ordering::equal) return c;
        auto d = terms_[i].coeff <=> o.terms_[i].coeff;
        if (d != std::strong_ordering::equal) return d;
    }
    return terms_.size() <=> o.terms_.size();
}

std::string Ordinal::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (i > 0) out += "+";
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coeff);
            continue;
        }
        if (t.exponent == nat(1)) {
            out += "w";
        } else {
            bool atom = t.exponent.is_finite() ||
                        (t.exponent.terms_.size() == 1 && t.exponent.terms_[0].coeff == 1 &&
                         t.exponent.terms_[0].exponent == nat(1));
            out += "w^";
            out += atom ? t.exponent.str() : "(" + t.exponent.str() + ")";
        }
        if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
    }
    return out;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

}  // namespace ttt
