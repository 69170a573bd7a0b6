#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "baxter/poly.hpp"

namespace baxter {

// Basis word of the shuffle Baxter algebra: factor 0 is the A-part,
// factors 1..n the tensor tail. Canonical words carry monic monomials;
// general polynomial factors enter through TensorWord and are expanded
// by multilinearity.
using Word = std::vector<Monomial>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// User-facing tensor word with arbitrary polynomial factors.
struct TensorWord {
    std::vector<Poly> factors;

    TensorWord() = default;
    explicit TensorWord(std::vector<Poly> fs) : factors(std::move(fs)) {}
    std::size_t length() const { return factors.size(); }
};

// An (m,n)-shuffle together with a chosen set of merged admissible
// pairs; `merges` holds the positions k of the pairs (k,k+1), 1-based.
struct MixableShuffle {
    std::vector<int> sigma;   // images sigma(1..m+n), 1-based
    std::vector<int> merges;  // sorted subset of admissible positions

    bool operator==(const MixableShuffle& o) const {
        return sigma == o.sigma && merges == o.merges;
    }
    bool operator<(const MixableShuffle& o) const {
        if (sigma != o.sigma) return sigma < o.sigma;
        return merges < o.merges;
    }
};

// Positions k with sigma(k) <= m < sigma(k+1).
std::vector<int> admissible_pairs(const std::vector<int>& sigma, int m);

// All mixable (m,n)-shuffles, duplicate-free, sorted by (sigma, merges).
// m = 0 or n = 0 yields the single empty shuffle.
std::vector<MixableShuffle> enumerate_mixable_shuffles(int m, int n);

// Element of the shuffle Baxter algebra: finite linear combination of
// canonical words with Poly coefficients (scalars live in Q[L]).
class ShuffleElement {
  public:
    using Terms = std::map<Word, Poly, WordLess>;

    ShuffleElement() = default;

    static ShuffleElement zero() { return {}; }
    static ShuffleElement one() { return from_word(Word{Monomial()}); }
    static ShuffleElement from_word(const Word& w, const Poly& coeff = Poly(1));
    // Expands polynomial factors by multilinearity into canonical words;
    // the L-parts of factors are pulled into the coefficient.
    static ShuffleElement from_tensor(const TensorWord& t, const Poly& coeff = Poly(1));
    // Image of a generator under the canonical inclusion j_A.
    static ShuffleElement generator(const std::string& name) {
        return from_word(Word{Monomial::var(name)});
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Word& w, const Poly& c);

    ShuffleElement operator+(const ShuffleElement& o) const;
    ShuffleElement operator-(const ShuffleElement& o) const;
    ShuffleElement operator-() const;
    ShuffleElement scalar_mul(const Poly& c) const;

    bool operator==(const ShuffleElement& o) const { return t_ == o.t_; }
    bool operator!=(const ShuffleElement& o) const { return t_ != o.t_; }

    // Specializes the weight symbol L in all coefficients.
    ShuffleElement subst_weight(const Poly& value) const;

    std::string str() const;

  private:
    Terms t_;
};

// The mixable shuffle product on pure tensors (both inputs nonempty),
// expanded over all mixable (m,n)-shuffles with lambda^|T| weights.
ShuffleElement shuffle_plus(const TensorWord& x, const TensorWord& y, const Poly& weight);

// Full product of the shuffle Baxter algebra: A-parts multiply in A,
// tensor tails by the mixable shuffle product.
ShuffleElement product(const ShuffleElement& a, const ShuffleElement& b, const Poly& weight);

// Baxter operator: prepends the factor 1 to every word.
ShuffleElement baxter_P(const ShuffleElement& a);

// Universal property: lifts a generator assignment into any Baxter
// algebra along phi-tilde(x0 (x) ... (x) xn) = phi(x0) * P(phi-tilde(x1 (x) ... (x) xn)).
// The algebra context must provide Element, zero(), one(), add, mul,
// scalar_mul (by Poly), P and weight().
template <class Alg>
typename Alg::Element lift(const std::map<std::string, typename Alg::Element>& phi,
                           const Alg& target, const ShuffleElement& a,
                           const Poly& source_weight = Poly::weight()) {
    const Poly target_weight = target.weight();
    if (source_weight.subst(kWeightName, target_weight) != target_weight)
        throw std::invalid_argument("lift: weight mismatch between source and target");

    auto phi_of_monomial = [&](const Monomial& m) {
        typename Alg::Element r = target.one();
        for (const auto& [name, exp] : m.exponents()) {
            auto it = phi.find(name);
            if (it == phi.end())
                throw std::invalid_argument("lift: unbound generator '" + name + "'");
            for (int i = 0; i < exp; ++i) r = target.mul(r, it->second);
        }
        return r;
    };

    typename Alg::Element result = target.zero();
    for (const auto& [w, c] : a.terms()) {
        typename Alg::Element img = phi_of_monomial(w.back());
        for (std::size_t i = w.size() - 1; i-- > 0;)
            img = target.mul(phi_of_monomial(w[i]), target.P(img));
        result = target.add(result, target.scalar_mul(c.subst(kWeightName, target_weight), img));
    }
    return result;
}

// The shuffle Baxter algebra as a lift target / checker instance.
struct ShuffleAlgebra {
    using Element = ShuffleElement;
    Poly lambda = Poly::weight();

    Element zero() const { return ShuffleElement::zero(); }
    Element one() const { return ShuffleElement::one(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return product(a, b, lambda); }
    Element scalar_mul(const Poly& c, const Element& a) const { return a.scalar_mul(c); }
    Element P(const Element& a) const { return baxter_P(a); }
    Poly weight() const { return lambda; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string str(const Element& a) const { return a.str(); }
};

}  // namespace baxter
