#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ttt {

// An ordinal below epsilon_0 in Cantor normal form:
// w^e1 * c1 + w^e2 * c2 + ... with e1 > e2 > ... and all ci >= 1.
// The empty term list is 0. Exponents are ordinals of the same kind,
// so the representation is a well-founded tree of terms.
//
// Values are immutable; all operations are pure.
class Ordinal {
public:
    struct Term {
        Ordinal exponent;
        uint64_t coeff;  // >= 1
    };

    Ordinal() = default;  // 0

    static Ordinal nat(uint64_t n);
    static Ordinal omega();
    // w^e * c (+ nothing); c >= 1.
    static Ordinal omega_pow(const Ordinal& e, uint64_t c = 1);
    // Builds from a term list, validating CNF (strictly decreasing
    // exponents, positive coefficients). Throws std::invalid_argument.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Finite = 0 or a single exponent-0 term.
    bool is_finite() const;
    // A limit ordinal: nonzero with no exponent-0 term.
    bool is_limit() const;
    bool is_successor() const { return !is_zero() && !is_limit(); }

    Ordinal successor() const;
    // For a successor ordinal, the ordinal directly below it.
    Ordinal predecessor() const;

    // The i-th element of the fundamental sequence of a limit ordinal,
    // under the convention
    //   (g + w^(b+1))[i] = g + w^b * (i+1)
    //   (g + w^l)[i]     = g + w^(l[i])   for limit exponents l.
    // So w[i] = i+1, (w*2)[i] = w + (i+1), (w^w)[i] = w^(i+1).
    // Throws std::invalid_argument unless is_limit().
    Ordinal fundamental(uint64_t i) const;

    std::strong_ordering operator<=>(const Ordinal& o) const;
    bool operator==(const Ordinal& o) const { return (*this <=> o) == std::strong_ordering::equal; }

    static const Ordinal& max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }

    // Literal syntax: "0", "5", "w", "w*2", "w^2*3+w+5", "w^(w+1)".
    // Compound exponents are parenthesized.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

}  // namespace ttt
