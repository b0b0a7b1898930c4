#include "valence/monoid.hpp"

#include <algorithm>
#include <cstdlib>

namespace valence {

// --------------------------------------------------------------------------
// MonoidSpec
// --------------------------------------------------------------------------

namespace {

// Generator symbols feed the signed-token syntax, where the suffix "^-1"
// marks inverses; a generator ending in it would make tokens ambiguous.
void check_generator_symbols(const Alphabet& a) {
    for (const auto& s : a.symbols())
        if (s.ends_with("^-1"))
            throw ParseError("generator symbol may not end with '^-1': '" + s + "'");
}

}  // namespace

MonoidSpec MonoidSpec::trivial() {
    return MonoidSpec{};
}

MonoidSpec MonoidSpec::free_group(Alphabet generators) {
    if (generators.empty()) throw PreconditionError("free group needs a non-empty alphabet");
    check_generator_symbols(generators);
    MonoidSpec s;
    s.kind_ = MonoidKind::FreeGroup;
    s.alphabet_ = std::move(generators);
    return s;
}

MonoidSpec MonoidSpec::polycyclic(Alphabet generators) {
    if (generators.empty()) throw PreconditionError("polycyclic monoid needs a non-empty alphabet");
    check_generator_symbols(generators);
    MonoidSpec s;
    s.kind_ = MonoidKind::Polycyclic;
    s.alphabet_ = std::move(generators);
    return s;
}

MonoidSpec MonoidSpec::free_abelian(std::size_t rank, std::optional<Alphabet> names) {
    MonoidSpec s;
    s.kind_ = MonoidKind::FreeAbelian;
    s.rank_ = rank;
    if (names) {
        if (names->size() != rank)
            throw PreconditionError("free abelian generator names must match the rank");
        check_generator_symbols(*names);
        s.alphabet_ = std::move(*names);
    } else {
        std::vector<std::string> symbols;
        symbols.reserve(rank);
        for (std::size_t i = 0; i < rank; ++i) symbols.push_back("c" + std::to_string(i));
        s.alphabet_ = Alphabet(std::move(symbols));
    }
    return s;
}

MonoidSpec MonoidSpec::product(std::vector<MonoidSpec> factors) {
    if (factors.empty()) throw PreconditionError("product needs at least one factor");
    for (const auto& f : factors)
        if (f.is_product()) throw PreconditionError("product factors must be non-product monoids");
    MonoidSpec s;
    s.kind_ = MonoidKind::Product;
    s.factors_ = std::move(factors);
    return s;
}

MonoidSpec MonoidSpec::product_of(const MonoidSpec& lhs, const MonoidSpec& rhs) {
    std::vector<MonoidSpec> factors;
    auto append = [&factors](const MonoidSpec& s) {
        if (s.is_product())
            factors.insert(factors.end(), s.factors_.begin(), s.factors_.end());
        else
            factors.push_back(s);
    };
    append(lhs);
    append(rhs);
    return product(std::move(factors));
}

const Alphabet& MonoidSpec::generator_alphabet() const {
    if (is_product()) throw PreconditionError("a product monoid has per-factor alphabets");
    return alphabet_;
}

std::size_t MonoidSpec::rank() const {
    if (kind_ != MonoidKind::FreeAbelian)
        throw PreconditionError("rank is defined for free abelian monoids only");
    return rank_;
}

const std::vector<MonoidSpec>& MonoidSpec::factors() const {
    if (!is_product()) throw PreconditionError("not a product monoid");
    return factors_;
}

std::size_t MonoidSpec::arity() const {
    return is_product() ? factors_.size() : 1;
}

const MonoidSpec& MonoidSpec::factor(std::size_t i) const {
    if (is_product()) {
        if (i >= factors_.size()) throw PreconditionError("factor index out of range");
        return factors_[i];
    }
    if (i != 0) throw PreconditionError("factor index out of range");
    return *this;
}

bool MonoidSpec::operator==(const MonoidSpec& rhs) const {
    return kind_ == rhs.kind_ && alphabet_ == rhs.alphabet_ && rank_ == rhs.rank_ &&
           factors_ == rhs.factors_;
}

// --------------------------------------------------------------------------
// Element types
// --------------------------------------------------------------------------

namespace {

bool freely_reduced(const SignedWord& w) {
    const auto& ls = w.letters();
    for (std::size_t i = 1; i < ls.size(); ++i)
        if (ls[i].symbol == ls[i - 1].symbol && ls[i].sign != ls[i - 1].sign) return false;
    return true;
}

}  // namespace

FreeGroupElement::FreeGroupElement(SignedWord reduced) : reduced_(std::move(reduced)) {
    if (!freely_reduced(reduced_))
        throw PreconditionError("word is not freely reduced: " + reduced_.tokens());
}

PolycyclicElement PolycyclicElement::identity(Alphabet alphabet) {
    PolycyclicElement e;
    e.alphabet_ = std::move(alphabet);
    return e;
}

PolycyclicElement PolycyclicElement::zero(Alphabet alphabet) {
    PolycyclicElement e;
    e.alphabet_ = std::move(alphabet);
    e.zero_ = true;
    return e;
}

PolycyclicElement PolycyclicElement::pair(Alphabet alphabet, Word pop, Word push) {
    PolycyclicElement e;
    e.alphabet_ = std::move(alphabet);
    for (const Word* w : {&pop, &push})
        for (const auto& sym : *w)
            if (!e.alphabet_.contains(sym))
                throw ParseError("stack symbol '" + sym + "' not in alphabet");
    e.pop_ = std::move(pop);
    e.push_ = std::move(push);
    return e;
}

const Word& PolycyclicElement::pop() const {
    if (zero_) throw PreconditionError("Zero has no pop word");
    return pop_;
}

const Word& PolycyclicElement::push() const {
    if (zero_) throw PreconditionError("Zero has no push word");
    return push_;
}

bool IntVector::is_identity() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](std::int64_t c) { return c == 0; });
}

ProductElement::ProductElement(std::vector<RegisterElement> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("product element needs at least one part");
}

std::size_t ProductElement::arity() const {
    return parts_.size();
}

bool ProductElement::operator==(const ProductElement& rhs) const {
    return parts_ == rhs.parts_;
}

bool RegisterElement::operator==(const RegisterElement& rhs) const {
    return value_ == rhs.value_;
}

// --------------------------------------------------------------------------
// Free group arithmetic
// --------------------------------------------------------------------------

FreeGroupElement free_reduce(const SignedWord& w) {
    std::vector<SignedLetter> stack;
    stack.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back().symbol == l.symbol && stack.back().sign != l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return FreeGroupElement(SignedWord(w.alphabet(), std::move(stack)));
}

FreeGroupElement fg_multiply(const FreeGroupElement& a, const FreeGroupElement& b) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetMismatch("free group elements over different alphabets");
    return free_reduce(a.word().concat(b.word()));
}

FreeGroupElement fg_invert(const FreeGroupElement& a) {
    // The inverse of a reduced word is reduced.
    return FreeGroupElement(a.word().inverse());
}

// --------------------------------------------------------------------------
// Polycyclic arithmetic
// --------------------------------------------------------------------------

namespace {

bool is_suffix(const Word& suffix, const Word& of) {
    if (suffix.size() > of.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), of.rbegin());
}

Word drop_suffix(const Word& w, std::size_t n) {
    return Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(n));
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

PolycyclicElement poly_eval(const SignedWord& w) {
    auto acc = PolycyclicElement::identity(w.alphabet());
    for (const auto& l : w.letters()) {
        PolycyclicElement gen =
            l.sign > 0 ? PolycyclicElement::pair(w.alphabet(), {}, {l.symbol})
                       : PolycyclicElement::pair(w.alphabet(), {l.symbol}, {});
        acc = poly_multiply(acc, gen);
        if (acc.is_zero()) return acc;  // Zero absorbs
    }
    return acc;
}

PolycyclicElement poly_multiply(const PolycyclicElement& a, const PolycyclicElement& b) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetMismatch("polycyclic elements over different alphabets");
    if (a.is_zero() || b.is_zero()) return PolycyclicElement::zero(a.alphabet());
    // Apply a = (u1,v1) first, then b = (u2,v2).
    const Word& v1 = a.push();
    const Word& u2 = b.pop();
    if (is_suffix(u2, v1)) {
        // v1 = s·u2: result (u1, s·v2)
        Word s = drop_suffix(v1, u2.size());
        return PolycyclicElement::pair(a.alphabet(), a.pop(), concat(std::move(s), b.push()));
    }
    if (is_suffix(v1, u2)) {
        // u2 = t·v1 with v1 a proper suffix: result (t·u1, v2)
        Word t = drop_suffix(u2, v1.size());
        return PolycyclicElement::pair(a.alphabet(), concat(std::move(t), a.pop()), b.push());
    }
    return PolycyclicElement::zero(a.alphabet());
}

// --------------------------------------------------------------------------
// Free abelian arithmetic
// --------------------------------------------------------------------------

IntVector zn_add(const IntVector& a, const IntVector& b) {
    if (a.rank() != b.rank()) throw PreconditionError("integer vectors of different rank");
    std::vector<std::int64_t> sum(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (__builtin_add_overflow(a.components()[i], b.components()[i], &sum[i]))
            throw OverflowError("integer register overflow");
    }
    return IntVector(std::move(sum));
}

IntVector zn_eval(const Alphabet& names, const SignedWord& w) {
    if (w.alphabet() != names)
        throw AlphabetMismatch("generator word not over the counter name alphabet");
    std::vector<std::int64_t> counts(names.size(), 0);
    for (const auto& l : w.letters()) {
        auto it = std::find(names.symbols().begin(), names.symbols().end(), l.symbol);
        auto idx = static_cast<std::size_t>(it - names.symbols().begin());
        if (__builtin_add_overflow(counts[idx], static_cast<std::int64_t>(l.sign), &counts[idx]))
            throw OverflowError("integer register overflow");
    }
    return IntVector(std::move(counts));
}

// --------------------------------------------------------------------------
// Products and generic dispatch
// --------------------------------------------------------------------------

ProductElement product_multiply(const ProductElement& a, const ProductElement& b) {
    if (a.arity() != b.arity())
        throw PreconditionError("product elements of different arity");
    std::vector<RegisterElement> parts;
    parts.reserve(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        parts.push_back(multiply(a.parts()[i], b.parts()[i]));
    return ProductElement(std::move(parts));
}

bool is_identity(const RegisterElement& e) {
    if (e.holds<TrivialElement>()) return true;
    if (e.holds<FreeGroupElement>()) return e.get<FreeGroupElement>().is_identity();
    if (e.holds<PolycyclicElement>()) return e.get<PolycyclicElement>().is_identity();
    if (e.holds<IntVector>()) return e.get<IntVector>().is_identity();
    const auto& parts = e.get<ProductElement>().parts();
    return std::all_of(parts.begin(), parts.end(),
                       [](const RegisterElement& p) { return is_identity(p); });
}

bool is_zero(const RegisterElement& e) {
    if (e.holds<PolycyclicElement>()) return e.get<PolycyclicElement>().is_zero();
    if (e.holds<ProductElement>()) {
        const auto& parts = e.get<ProductElement>().parts();
        return std::any_of(parts.begin(), parts.end(),
                           [](const RegisterElement& p) { return is_zero(p); });
    }
    return false;
}

RegisterElement identity_of(const MonoidSpec& spec) {
    switch (spec.kind()) {
        case MonoidKind::Trivial: return TrivialElement{};
        case MonoidKind::FreeGroup: return FreeGroupElement(spec.generator_alphabet());
        case MonoidKind::Polycyclic:
            return PolycyclicElement::identity(spec.generator_alphabet());
        case MonoidKind::FreeAbelian: return IntVector(spec.rank());
        case MonoidKind::Product: {
            std::vector<RegisterElement> parts;
            for (const auto& f : spec.factors()) parts.push_back(identity_of(f));
            return ProductElement(std::move(parts));
        }
    }
    throw PreconditionError("unknown monoid kind");
}

RegisterElement multiply(const RegisterElement& a, const RegisterElement& b) {
    if (a.holds<TrivialElement>() && b.holds<TrivialElement>()) return TrivialElement{};
    if (a.holds<FreeGroupElement>() && b.holds<FreeGroupElement>())
        return fg_multiply(a.get<FreeGroupElement>(), b.get<FreeGroupElement>());
    if (a.holds<PolycyclicElement>() && b.holds<PolycyclicElement>())
        return poly_multiply(a.get<PolycyclicElement>(), b.get<PolycyclicElement>());
    if (a.holds<IntVector>() && b.holds<IntVector>())
        return zn_add(a.get<IntVector>(), b.get<IntVector>());
    if (a.holds<ProductElement>() && b.holds<ProductElement>())
        return product_multiply(a.get<ProductElement>(), b.get<ProductElement>());
    throw PreconditionError("cannot multiply register elements of different kinds");
}

RegisterElement evaluate(const MonoidSpec& spec, std::span<const SignedWord> parts) {
    if (parts.size() != spec.arity())
        throw PreconditionError("multiplier arity does not match the monoid");
    if (spec.is_product()) {
        std::vector<RegisterElement> values;
        values.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            values.push_back(evaluate(spec.factors()[i], parts.subspan(i, 1)));
        return ProductElement(std::move(values));
    }
    const SignedWord& w = parts[0];
    switch (spec.kind()) {
        case MonoidKind::Trivial:
            if (!w.empty()) throw ParseError("the trivial monoid admits only ε multipliers");
            return TrivialElement{};
        case MonoidKind::FreeGroup:
            if (w.alphabet() != spec.generator_alphabet())
                throw AlphabetMismatch("multiplier not over the monoid's generators");
            return free_reduce(w);
        case MonoidKind::Polycyclic:
            if (w.alphabet() != spec.generator_alphabet())
                throw AlphabetMismatch("multiplier not over the monoid's generators");
            return poly_eval(w);
        case MonoidKind::FreeAbelian: return zn_eval(spec.generator_alphabet(), w);
        case MonoidKind::Product: break;
    }
    throw PreconditionError("unknown monoid kind");
}

std::size_t normal_form_size(const RegisterElement& e) {
    if (e.holds<TrivialElement>()) return 0;
    if (e.holds<FreeGroupElement>()) return e.get<FreeGroupElement>().length();
    if (e.holds<PolycyclicElement>()) {
        const auto& p = e.get<PolycyclicElement>();
        return p.is_zero() ? 0 : p.pop().size() + p.push().size();
    }
    if (e.holds<IntVector>()) {
        std::size_t m = 0;
        for (auto c : e.get<IntVector>().components())
            m = std::max<std::size_t>(m, static_cast<std::size_t>(c < 0 ? -c : c));
        return m;
    }
    std::size_t m = 0;
    for (const auto& p : e.get<ProductElement>().parts())
        m = std::max(m, normal_form_size(p));
    return m;
}

std::string register_key(const RegisterElement& e) {
    if (e.holds<TrivialElement>()) return "T";
    if (e.holds<FreeGroupElement>()) return "F:" + e.get<FreeGroupElement>().word().tokens();
    if (e.holds<PolycyclicElement>()) {
        const auto& p = e.get<PolycyclicElement>();
        if (p.is_zero()) return "P:0";
        std::string key = "P:";
        for (const auto& s : p.pop()) key += s + " ";
        key += "|";
        for (const auto& s : p.push()) key += " " + s;
        return key;
    }
    if (e.holds<IntVector>()) {
        std::string key = "Z:";
        for (auto c : e.get<IntVector>().components()) key += std::to_string(c) + ",";
        return key;
    }
    std::string key = "(";
    for (const auto& p : e.get<ProductElement>().parts()) key += register_key(p) + ";";
    return key + ")";
}

}  // namespace valence
